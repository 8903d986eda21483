#include "design.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "errors.hpp"
#include "field.hpp"
#include "numeric.hpp"
#include "residue.hpp"

namespace paley {

IncidenceDesign::IncidenceDesign(int points, std::vector<std::vector<int>> blocks)
    : points_(points), blocks_(std::move(blocks)) {
  if (points < 3 || (points + 1) % 4 != 0) {
    throw InvalidArgument("a Hadamard design needs 4n-1 points, got " + std::to_string(points));
  }
  n_ = (points + 1) / 4;
  if (static_cast<int>(blocks_.size()) != points_) {
    throw InvalidArgument("design needs exactly 4n-1 blocks");
  }
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
      throw InvalidArgument("block contains a repeated point");
    }
    if (!block.empty() && (block.front() < 0 || block.back() >= points_)) {
      throw InvalidArgument("block point out of range");
    }
    if (static_cast<int64_t>(block.size()) != 2 * n_ - 1) {
      throw InvalidArgument("every block must have size 2n-1");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (size_t i = 0; i < blocks_.size(); ++i) {
    for (size_t j = i + 1; j < blocks_.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(blocks_[i].begin(), blocks_[i].end(), blocks_[j].begin(),
                            blocks_[j].end(), std::back_inserter(meet));
      if (static_cast<int64_t>(meet.size()) != n_ - 1) {
        throw InvalidArgument("blocks must meet in exactly n-1 points");
      }
    }
  }
}

bool IncidenceDesign::incident(int point, int block) const {
  const auto& b = blocks_.at(static_cast<size_t>(block));
  return std::binary_search(b.begin(), b.end(), point);
}

std::string IncidenceDesign::to_text() const {
  std::ostringstream os;
  os << "points " << points_ << " blocks " << blocks_.size() << "\n";
  for (const auto& block : blocks_) {
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) os << ' ';
      os << block[i];
    }
    os << "\n";
  }
  return os.str();
}

IncidenceDesign IncidenceDesign::parse(const std::string& text) {
  std::istringstream is(text);
  std::string points_word, blocks_word;
  int points = 0, block_count = 0;
  if (!(is >> points_word >> points >> blocks_word >> block_count) || points_word != "points" ||
      blocks_word != "blocks") {
    throw ParseError("design file must start with 'points P blocks B'");
  }
  std::string rest_of_header;
  std::getline(is, rest_of_header);
  std::vector<std::vector<int>> blocks;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> block;
    int x;
    while (ls >> x) block.push_back(x);
    blocks.push_back(std::move(block));
  }
  if (static_cast<int>(blocks.size()) != block_count) {
    throw ParseError("design block count does not match header");
  }
  return IncidenceDesign(points, std::move(blocks));
}

IncidenceDesign qr_design(int64_t q) {
  auto pe = prime_power_decompose(q);
  if (!pe || q % 4 != 3) {
    throw InvalidArgument("qr design needs a prime power q = 3 mod 4");
  }
  FiniteField f(pe->first, pe->second);
  std::vector<FieldElement> squares = residue_set(f, false).members;
  std::vector<std::vector<int>> blocks;
  for (int64_t v = 0; v < q; ++v) {
    std::vector<int> block;
    block.reserve(squares.size());
    for (FieldElement s : squares) {
      block.push_back(static_cast<int>(f.add(s, FieldElement(v)).encoding()));
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceDesign(static_cast<int>(q), std::move(blocks));
}

IncidenceDesign pg_design(int k) {
  if (k < 2) throw InvalidArgument("projective geometry design needs k >= 2");
  if (k > 20) throw InvalidArgument("k too large for desk scale");
  int points = (1 << k) - 1;  // non-zero vectors, point i <-> vector i+1
  std::vector<std::vector<int>> blocks;
  for (int functional = 1; functional <= points; ++functional) {
    std::vector<int> block;
    for (int vec = 1; vec <= points; ++vec) {
      if (std::popcount(static_cast<unsigned>(functional & vec)) % 2 == 0) {
        block.push_back(vec - 1);
      }
    }
    blocks.push_back(std::move(block));
  }
  return IncidenceDesign(points, std::move(blocks));
}

}  // namespace paley
