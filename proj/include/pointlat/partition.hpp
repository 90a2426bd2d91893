#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace pointlat {

/// Integer partition: weakly-decreasing positive parts.  The empty sequence
/// is the distinguished partition (0) of zero.
class Partition {
 public:
  Partition() = default;  // (0)
  explicit Partition(std::vector<int> parts);

  static Partition zero() { return Partition{}; }
  /// Accepts "2,1,1", "(2,1,1)", "(0)", "0" and "".
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int sum() const;
  int length() const { return int(parts_.size()); }
  bool is_zero() const { return parts_.empty(); }
  /// Multiplicity of each part value, m_k.
  std::map<int, int> multiplicities() const;

  std::string to_string() const;  // "(2,1,1)", "(0)"
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Partitions of i in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int i);

/// All partitions of 0..d: (0) first, then i ascending, reverse-lex within i.
std::vector<Partition> partitions_up_to(int d);

}  // namespace pointlat
