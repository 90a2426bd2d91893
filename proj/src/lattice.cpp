#include "pointlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace pointlat {

namespace {

bool block_order(const Block& a, const Block& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool contains(const Block& big, const Block& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

LatticeElement::LatticeElement(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw std::invalid_argument("block has repeated members");
  }
  std::sort(blocks_.begin(), blocks_.end(), block_order);
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw std::invalid_argument("element has repeated blocks");
}

std::string LatticeElement::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += "{";
    for (size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(blocks_[i][j]);
    }
    s += "}";
  }
  return s + "}";
}

LatticeElement LatticeElement::parse(const std::string& text) {
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("element parse error at offset " + std::to_string(i) +
                                ": " + why);
  };
  auto skip_ws = [&] { while (i < text.size() && std::isspace(unsigned(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '{') fail("expected '{'");
  ++i;
  std::vector<Block> blocks;
  skip_ws();
  while (i < text.size() && text[i] != '}') {
    if (text[i] != '{') fail("expected '{' to open a block");
    ++i;
    Block b;
    skip_ws();
    while (i < text.size() && text[i] != '}') {
      size_t pos = 0;
      int v = std::stoi(text.substr(i), &pos);
      b.push_back(v);
      i += pos;
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size()) fail("unterminated block");
    ++i;  // '}'
    blocks.push_back(std::move(b));
    skip_ws();
    if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
  }
  if (i >= text.size()) fail("unterminated element");
  ++i;
  skip_ws();
  if (i != text.size()) fail("trailing characters");
  return LatticeElement(std::move(blocks));
}

int codim(int block_size, int d) {
  if (block_size < 0 || block_size > d + 1)
    throw std::invalid_argument("codim: block size out of range [0, d+1]");
  return d + 1 - block_size;
}

int rho(const LatticeElement& t, int d) {
  int r = 0;
  for (const auto& b : t.blocks()) r += codim(int(b.size()), d);
  return r;
}

int defect(std::span<const Block> blocks, int d) {
  if (blocks.empty()) throw std::invalid_argument("defect: needs at least one block");
  int l = int(blocks.size());
  int size_sum = 0;
  Block common = blocks[0];
  for (int i = 0; i < l; ++i) {
    size_sum += int(blocks[i].size());
    if (i > 0) {
      Block next;
      std::set_intersection(common.begin(), common.end(), blocks[i].begin(),
                            blocks[i].end(), std::back_inserter(next));
      common = std::move(next);
    }
  }
  return -(l - 1) * (d + 1) + size_sum - int(common.size());
}

bool is_member(const LatticeElement& t, int n, int d) {
  if (n <= d) throw std::invalid_argument("is_member: requires n > d");
  const auto& blocks = t.blocks();
  for (const auto& b : blocks) {
    if (int(b.size()) > d) return false;
    for (int v : b)
      if (v < 1 || v > n) throw std::invalid_argument("block member outside {1..n}");
  }
  int l = int(blocks.size());
  if (l >= 2 && rho(t, d) > d) return false;  // D(T) <= 0 would follow anyway
  // all sub-collections of size >= 2 must have positive defect
  std::vector<Block> sub;
  for (unsigned mask = 1; mask < (1u << l); ++mask) {
    if (std::popcount(mask) < 2) continue;
    sub.clear();
    for (int i = 0; i < l; ++i)
      if (mask & (1u << i)) sub.push_back(blocks[i]);
    if (defect(sub, d) <= 0) return false;
  }
  return true;
}

bool less(const LatticeElement& a, const LatticeElement& b, int d) {
  if (rho(a, d) >= rho(b, d)) return false;
  for (const auto& ba : a.blocks()) {
    bool found = false;
    for (const auto& bb : b.blocks()) {
      if (bb.size() > ba.size()) break;  // blocks sorted by size
      if (contains(ba, bb)) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

bool leq(const LatticeElement& a, const LatticeElement& b, int d) {
  return a == b || less(a, b, d);
}

Partition type_of(const LatticeElement& t, int d) {
  if (t.is_minimum()) return Partition::zero();
  std::vector<int> codims;
  for (const auto& b : t.blocks()) codims.push_back(codim(int(b.size()), d));
  return Partition(std::move(codims));
}

}  // namespace pointlat
