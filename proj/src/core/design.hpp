#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace paley {

// Incidence structure on 4n-1 points with 4n-1 blocks of size 2n-1, any
// two distinct blocks meeting in n-1 points. The constructor validates
// all of that; blocks are stored sorted (each block ascending, blocks
// ordered by point list), so equal designs compare equal.
class IncidenceDesign {
 public:
  IncidenceDesign(int points, std::vector<std::vector<int>> blocks);

  int points() const { return points_; }
  int64_t n() const { return n_; }  // the design parameter, points = 4n-1
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  bool incident(int point, int block) const;

  // "points P blocks B" header, then one block per line.
  std::string to_text() const;
  static IncidenceDesign parse(const std::string& text);

  friend bool operator==(const IncidenceDesign&, const IncidenceDesign&) = default;

 private:
  int points_;
  int64_t n_;
  std::vector<std::vector<int>> blocks_;
};

// Blocks are the translates S + v of the quadratic residues, q = 3 mod 4.
IncidenceDesign qr_design(int64_t q);

// Points are the non-zero k-bit vectors, blocks the hyperplanes of the
// projective geometry over F_2, k >= 2.
IncidenceDesign pg_design(int k);

}  // namespace paley
