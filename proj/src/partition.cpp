#include "pointlat/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pointlat {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
  std::string s = text;
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  if (s.empty() || s == "0") return zero();
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition part '" + item + "'");
    }
    if (pos != item.size()) throw std::invalid_argument("bad partition part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void emit(int remaining, int max_part, std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(acc.empty() ? Partition::zero() : Partition(acc));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int i) {
  if (i < 0) throw std::invalid_argument("partitions_of: negative argument");
  std::vector<Partition> out;
  std::vector<int> acc;
  emit(i, i == 0 ? 1 : i, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int d) {
  if (d < 0) throw std::invalid_argument("partitions_up_to: negative argument");
  std::vector<Partition> out;
  for (int i = 0; i <= d; ++i)
    for (auto& p : partitions_of(i)) out.push_back(std::move(p));
  return out;
}

}  // namespace pointlat
