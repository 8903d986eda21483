#include "hadamard.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "errors.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace paley {

SignMatrix::SignMatrix(int order, int fill) : order_(order) {
  if (order < 1) throw InvalidArgument("matrix order must be positive");
  if (fill < -1 || fill > 1) throw InvalidArgument("entries must be -1, 0 or +1");
  entries_.assign(static_cast<size_t>(order) * order, static_cast<int8_t>(fill));
}

void SignMatrix::set(int i, int j, int value) {
  if (value < -1 || value > 1) throw InvalidArgument("entries must be -1, 0 or +1");
  if (i < 0 || j < 0 || i >= order_ || j >= order_) throw InvalidArgument("index out of range");
  entries_[static_cast<size_t>(i) * order_ + j] = static_cast<int8_t>(value);
}

bool SignMatrix::has_zero_entry() const {
  return std::find(entries_.begin(), entries_.end(), 0) != entries_.end();
}

bool SignMatrix::is_symmetric() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (entry(i, j) != entry(j, i)) return false;
    }
  }
  return true;
}

SignMatrix SignMatrix::negated_row(int i) const {
  SignMatrix out = *this;
  for (int j = 0; j < order_; ++j) out.set(i, j, -entry(i, j));
  return out;
}

SignMatrix SignMatrix::negated_column(int j) const {
  SignMatrix out = *this;
  for (int i = 0; i < order_; ++i) out.set(i, j, -entry(i, j));
  return out;
}

std::string SignMatrix::to_text() const {
  if (has_zero_entry()) throw InvalidArgument("matrix with zero entries has no text form");
  std::ostringstream os;
  os << "order " << order_ << "\n";
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) os << (entry(i, j) > 0 ? '+' : '-');
    os << "\n";
  }
  return os.str();
}

SignMatrix SignMatrix::parse(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int order = 0;
  if (!(is >> word >> order) || word != "order" || order < 1) {
    throw ParseError("matrix file must start with 'order m'");
  }
  std::string rest;
  std::getline(is, rest);
  SignMatrix out(order);
  int row = 0;
  std::string line;
  while (std::getline(is, line) && row < order) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    if (static_cast<int>(line.size()) != order) throw ParseError("matrix row length mismatch");
    for (int j = 0; j < order; ++j) {
      if (line[j] != '+' && line[j] != '-') throw ParseError("matrix entries must be + or -");
      out.set(row, j, line[j] == '+' ? 1 : -1);
    }
    ++row;
  }
  if (row != order) throw ParseError("matrix row count mismatch");
  return out;
}

SignMatrix jacobsthal_matrix(const FiniteField& f) {
  if (f.q() % 2 == 0) throw InvalidArgument("Jacobsthal matrix requires odd q");
  SignMatrix q_matrix(static_cast<int>(f.q()));
  for (int64_t u = 0; u < f.q(); ++u) {
    for (int64_t v = 0; v < f.q(); ++v) {
      q_matrix.set(static_cast<int>(u), static_cast<int>(v),
                   chi(f, f.sub(FieldElement(v), FieldElement(u))));
    }
  }
  return q_matrix;
}

namespace {

// Rows packed as bitmasks (bit j set <=> entry -1) so that orthogonality
// is a popcount: distinct rows of a Hadamard matrix differ in exactly
// m/2 positions.
std::vector<std::vector<uint64_t>> packed_rows(const SignMatrix& h) {
  int m = h.order();
  int words = (m + 63) / 64;
  std::vector<std::vector<uint64_t>> rows(static_cast<size_t>(m),
                                          std::vector<uint64_t>(static_cast<size_t>(words), 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (h.entry(i, j) < 0) rows[i][j >> 6] |= uint64_t{1} << (j & 63);
    }
  }
  return rows;
}

}  // namespace

HadamardCheck is_hadamard(const SignMatrix& h) {
  if (h.has_zero_entry()) throw InvalidArgument("Hadamard check requires entries +-1");
  int m = h.order();
  if (m % 2 == 1 && m > 1) return {false, 0, 1};
  auto rows = packed_rows(h);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      int differ = 0;
      for (size_t w = 0; w < rows[i].size(); ++w) differ += std::popcount(rows[i][w] ^ rows[j][w]);
      if (2 * differ != m) return {false, i, j};
    }
  }
  return {true, -1, -1};
}

SignMatrix sylvester(int k) {
  if (k < 0) throw InvalidArgument("sylvester needs k >= 0");
  if (k > 12) throw InvalidArgument("sylvester order 2^k beyond desk scale");
  SignMatrix h(1, 1);
  for (int step = 0; step < k; ++step) {
    int m = h.order();
    SignMatrix next(2 * m, 1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        int v = h.entry(i, j);
        next.set(i, j, v);
        next.set(i, j + m, v);
        next.set(i + m, j, v);
        next.set(i + m, j + m, -v);
      }
    }
    h = next;
  }
  return h;
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b) {
  if (!is_hadamard(a).ok || !is_hadamard(b).ok) {
    throw InvalidArgument("kronecker product requires Hadamard factors");
  }
  int ma = a.order(), mb = b.order();
  SignMatrix out(ma * mb, 1);
  for (int i = 0; i < ma; ++i) {
    for (int j = 0; j < ma; ++j) {
      for (int k = 0; k < mb; ++k) {
        for (int l = 0; l < mb; ++l) {
          out.set(i * mb + k, j * mb + l, a.entry(i, j) * b.entry(k, l));
        }
      }
    }
  }
  return out;
}

SignMatrix paley_type_i(int64_t q) {
  auto pe = prime_power_decompose(q);
  if (!pe || q % 4 != 3) throw InvalidArgument("type I needs a prime power q = 3 mod 4");
  FiniteField f(pe->first, pe->second);
  SignMatrix q_matrix = jacobsthal_matrix(f);
  int m = static_cast<int>(q) + 1;
  SignMatrix h(m, 1);  // row/column 0 is the extra index, all +1
  for (int u = 0; u < m - 1; ++u) {
    for (int v = 0; v < m - 1; ++v) {
      h.set(u + 1, v + 1, q_matrix.entry(u, v) - (u == v ? 1 : 0));
    }
  }
  return h;
}

SignMatrix paley_type_ii(int64_t q) {
  auto pe = prime_power_decompose(q);
  if (!pe || q % 4 != 1) throw InvalidArgument("type II needs a prime power q = 1 mod 4");
  FiniteField f(pe->first, pe->second);
  SignMatrix q_matrix = jacobsthal_matrix(f);
  int b_order = static_cast<int>(q) + 1;
  // B = [[0, R], [R^T, Q]] with entries -1, 0, +1
  SignMatrix b(b_order, 1);
  b.set(0, 0, 0);
  for (int u = 0; u < b_order - 1; ++u) {
    for (int v = 0; v < b_order - 1; ++v) {
      b.set(u + 1, v + 1, q_matrix.entry(u, v));
    }
  }
  // Each +-1 becomes +-[[+,+],[+,-]]; each 0 becomes [[+,-],[-,-]].
  SignMatrix h(2 * b_order, 1);
  for (int i = 0; i < b_order; ++i) {
    for (int j = 0; j < b_order; ++j) {
      int v = b.entry(i, j);
      int r = 2 * i, c = 2 * j;
      if (v == 0) {
        h.set(r, c, 1);
        h.set(r, c + 1, -1);
        h.set(r + 1, c, -1);
        h.set(r + 1, c + 1, -1);
      } else {
        h.set(r, c, v);
        h.set(r, c + 1, v);
        h.set(r + 1, c, v);
        h.set(r + 1, c + 1, -v);
      }
    }
  }
  return h;
}

std::vector<SignMatrix> paley_partition(int k) {
  if (k < 2) throw InvalidArgument("partition needs k >= 2");
  if (k > 4) throw ResourceLimit("partition of {+-1}^(2^k) beyond the memory budget for k > 4");
  int m = 1 << k;
  SignMatrix base = sylvester(k);
  // row group of sylvester(k) as XOR-closed masks (bit j <=> entry -1)
  std::vector<uint32_t> row_group;
  for (int i = 0; i < m; ++i) {
    uint32_t mask = 0;
    for (int j = 0; j < m; ++j) {
      if (base.entry(i, j) < 0) mask |= uint32_t{1} << j;
    }
    row_group.push_back(mask);
  }
  uint64_t total = uint64_t{1} << m;
  std::vector<uint8_t> seen(static_cast<size_t>(total), 0);
  std::vector<SignMatrix> out;
  for (uint64_t rep = 0; rep < total; ++rep) {
    if (seen[static_cast<size_t>(rep)]) continue;
    std::vector<uint32_t> coset;
    for (uint32_t row : row_group) {
      uint32_t member = static_cast<uint32_t>(rep) ^ row;
      seen[member] = 1;
      coset.push_back(member);
    }
    std::sort(coset.begin(), coset.end());
    SignMatrix h(m, 1);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        h.set(i, j, (coset[static_cast<size_t>(i)] >> j) & 1 ? -1 : 1);
      }
    }
    out.push_back(std::move(h));
  }
  return out;
}

bool is_normalized(const SignMatrix& h) {
  for (int i = 0; i < h.order(); ++i) {
    if (h.entry(0, i) != 1 || h.entry(i, 0) != 1) return false;
  }
  return true;
}

SignMatrix normalize(const SignMatrix& h) {
  if (!is_hadamard(h).ok) throw InvalidArgument("normalize requires a Hadamard matrix");
  SignMatrix out = h;
  for (int i = 0; i < out.order(); ++i) {
    if (out.entry(i, 0) < 0) out = out.negated_row(i);
  }
  for (int j = 0; j < out.order(); ++j) {
    if (out.entry(0, j) < 0) out = out.negated_column(j);
  }
  return out;
}

IncidenceDesign matrix_to_design(const SignMatrix& h) {
  int m = h.order();
  if (m < 4 || m % 4 != 0) throw InvalidArgument("design conversion needs order 4n >= 4");
  SignMatrix norm = normalize(h);
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i < m; ++i) {
    std::vector<int> block;
    for (int j = 1; j < m; ++j) {
      if (norm.entry(i, j) > 0) block.push_back(j - 1);
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceDesign(m - 1, std::move(blocks));
}

SignMatrix design_to_matrix(const IncidenceDesign& d) {
  int m = d.points() + 1;
  SignMatrix h(m, 1);
  for (int b = 0; b < d.points(); ++b) {
    for (int p = 0; p < d.points(); ++p) {
      h.set(b + 1, p + 1, d.incident(p, b) ? 1 : -1);
    }
  }
  if (!is_hadamard(h).ok) throw InvalidArgument("design does not yield a Hadamard matrix");
  return h;
}

std::vector<std::vector<int8_t>> simplex_vertices(const SignMatrix& h) {
  if (!is_hadamard(h).ok) throw InvalidArgument("simplex vertices need a Hadamard matrix");
  if (!is_normalized(h)) throw InvalidArgument("simplex vertices need a normalised matrix");
  int m = h.order();
  std::vector<std::vector<int8_t>> out;
  for (int i = 0; i < m; ++i) {
    std::vector<int8_t> row;
    for (int j = 1; j < m; ++j) row.push_back(static_cast<int8_t>(h.entry(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

CompoundCount compound_counts(int64_t n, uint64_t group_order) {
  if (n < 1) throw InvalidArgument("compound counts need n >= 1");
  if (n > 5) throw ResourceLimit("factorial (4n-1)! beyond 64-bit range");
  if (group_order == 0) throw InvalidArgument("group order must be positive");
  unsigned __int128 factorial = 1;
  for (int64_t i = 2; i <= 4 * n - 1; ++i) factorial *= static_cast<unsigned>(i);
  if (factorial % group_order != 0) {
    throw InvalidArgument("group order does not divide (4n-1)!");
  }
  unsigned __int128 d1 = factorial / group_order;
  unsigned __int128 pow2 = unsigned{1};
  pow2 <<= (4 * n - 3);
  unsigned __int128 numerator = pow2 * d1;
  if (numerator % static_cast<unsigned __int128>(n) != 0) {
    throw InvalidArgument("n does not divide 2^(4n-3) d1");
  }
  unsigned __int128 compounds = numerator / static_cast<unsigned __int128>(n);
  constexpr unsigned __int128 kMax = static_cast<unsigned __int128>(INT64_MAX);
  if (d1 > kMax || compounds > kMax) throw ResourceLimit("compound count overflows 64 bits");
  CompoundCount out;
  out.n = n;
  out.group_order = group_order;
  out.d1 = static_cast<int64_t>(d1);
  out.compounds = static_cast<int64_t>(compounds);
  return out;
}

CoverageResult paley_coverage(int64_t limit) {
  if (limit < 4) throw InvalidArgument("coverage limit must be at least 4");
  std::vector<uint8_t> achievable(static_cast<size_t>(limit) + 1, 0);
  for (int64_t m = 1; m <= limit; m *= 2) achievable[static_cast<size_t>(m)] = 1;
  for (int64_t q = 3; q < limit; ++q) {
    if (!prime_power_decompose(q)) continue;
    if (q % 4 == 3) {
      for (int64_t m = q + 1; m <= limit; m *= 2) achievable[static_cast<size_t>(m)] = 1;
    } else if (q % 4 == 1) {
      for (int64_t m = 2 * (q + 1); m <= limit; m *= 2) achievable[static_cast<size_t>(m)] = 1;
    }
  }
  CoverageResult out;
  for (int64_t m = 4; m <= limit; m += 4) {
    if (achievable[static_cast<size_t>(m)]) {
      out.achievable.push_back(m);
    } else {
      out.exceptions.push_back(m);
    }
  }
  return out;
}

bool is_hadamard_automorphism(const SignMatrix& h, const SignedPermutation& p,
                              const SignedPermutation& q) {
  int m = h.order();
  auto check_monomial = [m](const SignedPermutation& sp) {
    if (static_cast<int>(sp.images.size()) != m || static_cast<int>(sp.signs.size()) != m) {
      throw InvalidArgument("monomial matrix order mismatch");
    }
    std::vector<uint8_t> seen(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
      int img = sp.images[i];
      if (img < 0 || img >= m || seen[img]) throw InvalidArgument("monomial images not a bijection");
      seen[img] = 1;
      if (sp.signs[i] != 1 && sp.signs[i] != -1) {
        throw InvalidArgument("monomial signs must be +-1");
      }
    }
  };
  check_monomial(p);
  check_monomial(q);
  // (P H Q^T)(i, j) = p.sign[i] q.sign[j] H(p.image[i], q.image[j])
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int lhs = p.signs[i] * q.signs[j] * h.entry(p.images[i], q.images[j]);
      if (lhs != h.entry(i, j)) return false;
    }
  }
  return true;
}

}  // namespace paley
