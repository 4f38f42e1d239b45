#pragma once

namespace p1gw {

/// 2x2 matrix over an arbitrary ring scalar. Used both for coefficient
/// matrices (T = EpsLaurent) and for matrices of series (T = LambdaSeries).
template <typename T>
struct Mat2 {
  T a11{}, a12{}, a21{}, a22{};

  template <typename F>
  auto map(F&& f) const -> Mat2<decltype(f(a11))> {
    return {f(a11), f(a12), f(a21), f(a22)};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a11 - y.a11, x.a12 - y.a12, x.a21 - y.a21, x.a22 - y.a22};
  }
  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
  }
  Mat2& operator+=(const Mat2& y) { return *this = *this + y; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a11 == y.a11 && x.a12 == y.a12 && x.a21 == y.a21 && x.a22 == y.a22;
  }
};

template <typename T>
T trace(const Mat2<T>& m) {
  return m.a11 + m.a22;
}

/// tr(x y) without forming the off-diagonal entries of the product.
template <typename T>
T trace_of_product(const Mat2<T>& x, const Mat2<T>& y) {
  return x.a11 * y.a11 + x.a12 * y.a21 + x.a21 * y.a12 + x.a22 * y.a22;
}

template <typename T>
T determinant(const Mat2<T>& m) {
  return m.a11 * m.a22 - m.a12 * m.a21;
}

template <typename T>
Mat2<T> commutator(const Mat2<T>& x, const Mat2<T>& y) {
  return x * y - y * x;
}

}  // namespace p1gw
