#ifndef RMRW_BINARY_WORD_HPP
#define RMRW_BINARY_WORD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmrw {

// Fixed-length bit vector with cached Hamming weight. Bit j-1 (0-based
// storage) is the indicator of cell j; cells are 1-based throughout the
// public API, matching the usual coding-theory convention.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(int n) : bits_(n, 0), weight_(0) {}

  static BinaryWord from_string(const std::string& s) {
    BinaryWord w(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        w.bits_[i] = 1;
        ++w.weight_;
      } else if (s[i] != '0') {
        throw std::invalid_argument("BinaryWord: bad character in bit string");
      }
    }
    return w;
  }

  int size() const { return static_cast<int>(bits_.size()); }
  int weight() const { return weight_; }

  bool get(int pos0) const { return bits_[pos0] != 0; }

  void set(int pos0, bool v) {
    if (bits_[pos0] != static_cast<std::uint8_t>(v)) {
      weight_ += v ? 1 : -1;
      bits_[pos0] = v ? 1 : 0;
    }
  }

  void flip(int pos0) { set(pos0, !get(pos0)); }

  /// Componentwise x <= s: every 1 of *this is a 1 of s.
  bool covered_by(const BinaryWord& s) const {
    check_same_size(s);
    for (int i = 0; i < size(); ++i)
      if (bits_[i] && !s.bits_[i]) return false;
    return true;
  }

  BinaryWord operator^(const BinaryWord& o) const {
    check_same_size(o);
    BinaryWord r(size());
    for (int i = 0; i < size(); ++i) r.set(i, bits_[i] != o.bits_[i]);
    return r;
  }

  bool operator==(const BinaryWord& o) const { return bits_ == o.bits_; }
  bool operator!=(const BinaryWord& o) const { return bits_ != o.bits_; }
  bool operator<(const BinaryWord& o) const { return bits_ < o.bits_; }

  /// 1-based indices of the set bits, ascending.
  std::vector<int> support() const {
    std::vector<int> s;
    s.reserve(weight_);
    for (int i = 0; i < size(); ++i)
      if (bits_[i]) s.push_back(i + 1);
    return s;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

 private:
  void check_same_size(const BinaryWord& o) const {
    if (o.size() != size())
      throw std::invalid_argument("BinaryWord: length mismatch");
  }

  std::vector<std::uint8_t> bits_;
  int weight_ = 0;
};

/// Characteristic vector of a set of cells S ⊆ [n] (1-based).
inline BinaryWord theta(const std::vector<int>& cells, int n) {
  BinaryWord w(n);
  for (int c : cells) {
    if (c < 1 || c > n) throw std::out_of_range("theta: cell index outside [n]");
    w.set(c - 1, true);
  }
  return w;
}

/// Inverse of theta: the set of cells whose bit is 1.
inline std::vector<int> theta_inv(const BinaryWord& w) { return w.support(); }

}  // namespace rmrw

#endif
