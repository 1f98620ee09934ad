#include "rclab/complex.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rclab/errors.hpp"

namespace rclab {

Complex::Complex(int n, int k, std::vector<SimplexRank> k_faces)
    : n_(n), k_(k), faces_(std::move(k_faces)) {
  if (k_ < 1 || k_ > n_ - 1)
    throw PreconditionError("complex: need 1 <= k <= n-1");
  const std::uint64_t candidates = binomial(n_, k_ + 1);
  std::sort(faces_.begin(), faces_.end());
  if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end())
    throw PreconditionError("complex: duplicate k-face");
  if (!faces_.empty() && faces_.back() >= candidates)
    throw PreconditionError("complex: face rank out of range");
  present_.assign((candidates + 63) / 64, 0);
  for (SimplexRank r : faces_) present_[r >> 6] |= std::uint64_t{1} << (r & 63);
}

std::uint64_t Complex::candidate_count() const {
  return binomial(n_, k_ + 1);
}

bool Complex::has_face(SimplexRank r) const {
  if (r >= candidate_count()) return false;
  return (present_[r >> 6] >> (r & 63)) & 1;
}

Complex sample_complex(int n, int k, double p, RngSeed seed) {
  if (!(p >= 0.0 && p <= 1.0))
    throw PreconditionError("sample_complex: p must lie in [0, 1]");
  if (k < 1 || k > n - 1)
    throw PreconditionError("sample_complex: need 1 <= k <= n-1");
  const std::uint64_t candidates = binomial(n, k + 1);
  UnitRng rng(seed);
  std::vector<SimplexRank> faces;
  for (std::uint64_t r = 0; r < candidates; ++r)
    if (rng.next_unit() < p) faces.push_back(r);
  return Complex(n, k, std::move(faces));
}

std::int64_t isolated_count(const Complex& y) {
  const int n = y.n();
  const int k = y.k();
  const std::uint64_t facet_total = binomial(n, k);
  std::vector<std::uint64_t> covered((facet_total + 63) / 64, 0);
  std::vector<int> verts, facet(k);
  for (SimplexRank face : y.k_faces()) {
    unrank_into(face, k + 1, n, verts);
    for (int i = 0; i <= k; ++i) {
      int t = 0;
      for (int j = 0; j <= k; ++j)
        if (j != i) facet[t++] = verts[j];
      const SimplexRank fr = rank_of_sorted(facet);
      covered[fr >> 6] |= std::uint64_t{1} << (fr & 63);
    }
  }
  std::uint64_t hit = 0;
  for (std::uint64_t w : covered) hit += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return static_cast<std::int64_t>(facet_total - hit);
}

double expected_isolated(int n, int k, double p) {
  if (k < 1 || k > n - 1)
    throw PreconditionError("expected_isolated: need 1 <= k <= n-1");
  if (!(p >= 0.0 && p <= 1.0))
    throw PreconditionError("expected_isolated: p must lie in [0, 1]");
  return static_cast<double>(binomial(n, k)) * std::pow(1.0 - p, n - k);
}

void write_complex(const Complex& y, std::ostream& out) {
  out << y.n() << ' ' << y.k() << '\n';
  std::vector<int> verts;
  for (SimplexRank r : y.k_faces()) {
    unrank_into(r, y.k() + 1, y.n(), verts);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (i) out << ' ';
      out << verts[i];
    }
    out << '\n';
  }
}

Complex parse_complex(std::istream& in) {
  std::string line;
  int n = 0, k = 0;
  bool have_header = false;
  std::vector<SimplexRank> faces;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      if (!(fields >> n >> k))
        throw ParseError("complex file: malformed header on line " +
                         std::to_string(lineno));
      std::string rest;
      if (fields >> rest)
        throw ParseError("complex file: trailing data in header");
      if (k < 1 || k > n - 1)
        throw ParseError("complex file: header requires 1 <= k <= n-1");
      have_header = true;
      continue;
    }
    std::vector<int> verts;
    int v;
    while (fields >> v) verts.push_back(v);
    if (!fields.eof())
      throw ParseError("complex file: non-numeric face data on line " +
                       std::to_string(lineno));
    if (static_cast<int>(verts.size()) != k + 1)
      throw ParseError("complex file: face needs exactly k+1 vertices, line " +
                       std::to_string(lineno));
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (verts[i] < 1 || verts[i] > n)
        throw ParseError("complex file: vertex out of range on line " +
                         std::to_string(lineno));
      if (i > 0 && verts[i] <= verts[i - 1])
        throw ParseError(
            "complex file: vertices must strictly increase on line " +
            std::to_string(lineno));
    }
    faces.push_back(rank_of_sorted(verts));
  }
  if (!have_header) throw ParseError("complex file: missing header");
  std::sort(faces.begin(), faces.end());
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
    throw ParseError("complex file: duplicate face");
  return Complex(n, k, std::move(faces));
}

Complex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open complex file: " + path);
  return parse_complex(in);
}

}  // namespace rclab
