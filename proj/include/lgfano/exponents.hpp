#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace lgfano {

// Integer exponent vector of a Laurent monomial. Length is fixed by the
// polynomial context; vectors of different lengths never compare.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int32_t> init) : e_(init) {}
  explicit ExponentVector(std::vector<int32_t> e) : e_(std::move(e)) {}

  size_t size() const { return e_.size(); }
  int32_t operator[](size_t i) const { return e_[i]; }
  int32_t& operator[](size_t i) { return e_[i]; }
  const std::vector<int32_t>& data() const { return e_; }

  long total_degree() const {
    long s = 0;
    for (int32_t x : e_) s += x;
    return s;
  }

  ExponentVector shifted(size_t i, int32_t delta) const {
    ExponentVector r(*this);
    r.e_[i] += delta;
    return r;
  }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("exponent length mismatch");
    ExponentVector r(a);
    for (size_t i = 0; i < r.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const ExponentVector& a, const ExponentVector& b) {
    return !(a == b);
  }

 private:
  std::vector<int32_t> e_;
};

// Graded-lexicographic: higher total degree first, ties broken by the first
// differing coordinate (larger first). Strict weak order used for canonical
// term storage and display.
struct GradedLexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da > db;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

struct ExponentVectorHash {
  size_t operator()(const ExponentVector& e) const {
    uint64_t h = 0x9e3779b97f4a7c15ull ^ (e.size() * 0x2545f4914f6cdd1dull);
    for (size_t i = 0; i < e.size(); ++i) {
      uint64_t x = static_cast<uint64_t>(static_cast<int64_t>(e[i]));
      x ^= h;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 31;
      h = x;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace lgfano
