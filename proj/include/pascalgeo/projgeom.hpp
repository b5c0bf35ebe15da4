#pragma once

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pascalgeo/error.hpp"
#include "pascalgeo/rational.hpp"

namespace pascalgeo {

struct P1Tag {
  static constexpr const char* open = "[";
  static constexpr const char* close = "]";
  static constexpr const char* name = "P1 point";
};
struct PointTag {
  static constexpr const char* open = "[";
  static constexpr const char* close = "]";
  static constexpr const char* name = "point";
};
struct LineTag {
  static constexpr const char* open = "<";
  static constexpr const char* close = ">";
  static constexpr const char* name = "line";
};

/// A point of a projective space stored in canonical primitive form:
/// coprime integer coordinates whose first nonzero entry is positive.
template <std::size_t N, class Tag>
class Homogeneous {
 public:
  using Coords = std::array<Rational, N>;

  explicit Homogeneous(Coords coords) : c_(std::move(coords)) { canonicalize(); }

  const Coords& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  friend bool operator==(const Homogeneous& lhs, const Homogeneous& rhs) { return lhs.c_ == rhs.c_; }
  friend std::strong_ordering operator<=>(const Homogeneous& lhs, const Homogeneous& rhs) {
    for (std::size_t i = 0; i < N; ++i) {
      if (lhs.c_[i] < rhs.c_[i]) return std::strong_ordering::less;
      if (rhs.c_[i] < lhs.c_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string out = Tag::open;
    for (std::size_t i = 0; i < N; ++i) {
      if (i) out += ":";
      out += pascalgeo::to_string(c_[i]);
    }
    return out + Tag::close;
  }

 private:
  void canonicalize() {
    Integer lcm_den = 1;
    for (const auto& x : c_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
    Integer g = 0;
    std::array<Integer, N> ints;
    for (std::size_t i = 0; i < N; ++i) {
      ints[i] = c_[i].get_num() * (lcm_den / c_[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) throw DomainError(std::string("zero vector is not a ") + Tag::name);
    int lead = 0;
    for (const auto& x : ints) {
      if (x != 0) {
        lead = sgn(x);
        break;
      }
    }
    if (lead < 0) g = -g;
    for (std::size_t i = 0; i < N; ++i) c_[i] = Rational(Integer(ints[i] / g));
  }

  Coords c_;
};

/// [x0 : x1] on the parameter line; affine value x1 / x0, infinity = [0:1].
class P1Point : public Homogeneous<2, P1Tag> {
 public:
  using Homogeneous::Homogeneous;
  P1Point(const Rational& x0, const Rational& x1) : Homogeneous(Coords{x0, x1}) {}

  static P1Point affine(const Rational& a) { return P1Point(Rational(1), a); }
  static P1Point infinity() { return P1Point(Rational(0), Rational(1)); }

  bool is_infinite() const { return (*this)[0] == 0; }
  std::optional<Rational> value() const {
    if (is_infinite()) return std::nullopt;
    return Rational((*this)[1] / (*this)[0]);
  }

  /// Affine value as "p/q", or "inf".
  std::string to_value_string() const {
    auto v = value();
    return v ? pascalgeo::to_string(*v) : std::string("inf");
  }
};

inline P1Point parse_p1(std::string_view text) {
  if (text == "inf") return P1Point::infinity();
  return P1Point::affine(parse_rational(text));
}

using ProjPoint = Homogeneous<3, PointTag>;
using ProjLine = Homogeneous<3, LineTag>;

inline ProjPoint make_point(const Rational& z0, const Rational& z1, const Rational& z2) {
  return ProjPoint({z0, z1, z2});
}
inline ProjLine make_line(const Rational& u0, const Rational& u1, const Rational& u2) {
  return ProjLine({u0, u1, u2});
}

using Vec3 = std::array<Rational, 3>;
using Mat3 = std::array<std::array<Rational, 3>, 3>;

inline Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

inline Rational dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

inline bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

inline bool incident(const ProjLine& l, const ProjPoint& p) { return dot(l.coords(), p.coords()) == 0; }

inline ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  Vec3 v = cross(p.coords(), q.coords());
  if (is_zero(v)) throw DomainError("coincident elements: cannot join " + p.to_string() + " with itself");
  return ProjLine(v);
}

inline ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  Vec3 v = cross(l.coords(), m.coords());
  if (is_zero(v)) throw DomainError("coincident elements: cannot meet " + l.to_string() + " with itself");
  return ProjPoint(v);
}

inline bool collinear(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  return dot(cross(p.coords(), q.coords()), r.coords()) == 0;
}
inline bool concurrent(const ProjLine& l, const ProjLine& m, const ProjLine& n) {
  return dot(cross(l.coords(), m.coords()), n.coords()) == 0;
}

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

inline Mat3 multiply(const Mat3& x, const Mat3& y) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational acc = 0;
      for (int k = 0; k < 3; ++k) acc += x[i][k] * y[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

inline Mat3 transpose(const Mat3& m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  }
  return out;
}

inline Rational determinant(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// adj(m) = det(m) * m^{-1}; the projective inverse without division.
inline Mat3 adjugate(const Mat3& m) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The fixed conic z0 z2 = z1^2.

/// Symmetric matrix of 2 (z0 z2 - z1^2).
inline const Mat3& conic_matrix() {
  static const Mat3 m{{{0, 0, 1}, {0, -2, 0}, {1, 0, 0}}};
  return m;
}

inline bool on_conic(const ProjPoint& p) { return p[0] * p[2] == p[1] * p[1]; }

/// tau([x0:x1]) = [x0^2 : x0 x1 : x1^2]
inline ProjPoint tau(const P1Point& p) { return ProjPoint({p[0] * p[0], p[0] * p[1], p[1] * p[1]}); }
inline ProjPoint tau(const Rational& a) { return tau(P1Point::affine(a)); }

inline ProjLine tangent_at(const P1Point& p) { return ProjLine({p[1] * p[1], -2 * p[0] * p[1], p[0] * p[0]}); }

inline ProjLine polar(const ProjPoint& p) { return ProjLine(mat_vec(conic_matrix(), p.coords())); }

inline ProjPoint pole(const ProjLine& l) {
  // conic_matrix()^{-1} up to scale
  static const Mat3 inverse{{{0, 0, 2}, {0, -1, 0}, {2, 0, 0}}};
  return ProjPoint(mat_vec(inverse, l.coords()));
}

struct PolarTriangle {
  ProjPoint p, q, r;
  ProjPoint p_pole, q_pole, r_pole;  // poles of QR, PR, PQ
  ProjPoint center;                  // common point of PP', QQ', RR'
  ProjLine axis;                     // line through PQ^P'Q', PR^P'R', QR^Q'R'
  std::array<ProjPoint, 3> cross_points;
};

/// Polar triangle of the conic triangle tau(P) tau(Q) tau(R) and its
/// perspectivity. Throws std::logic_error when concurrency or collinearity
/// fails, which would be an arithmetic defect.
inline PolarTriangle polar_triangle(const P1Point& p1, const P1Point& q1, const P1Point& r1) {
  if (p1 == q1 || p1 == r1 || q1 == r1) throw DomainError("polar triangle needs three distinct points");
  const ProjPoint p = tau(p1), q = tau(q1), r = tau(r1);
  const ProjPoint pp = pole(join(q, r)), qq = pole(join(p, r)), rr = pole(join(p, q));
  const ProjLine lp = join(p, pp), lq = join(q, qq), lr = join(r, rr);
  const ProjPoint center = meet(lp, lq);
  if (!incident(lr, center)) throw std::logic_error("Chasles: PP', QQ', RR' not concurrent");
  std::array<ProjPoint, 3> cps{meet(join(p, q), join(pp, qq)), meet(join(p, r), join(pp, rr)),
                               meet(join(q, r), join(qq, rr))};
  const ProjLine axis = join(cps[0], cps[1]);
  if (!incident(axis, cps[2])) throw std::logic_error("Chasles: cross points not collinear");
  return PolarTriangle{p, q, r, pp, qq, rr, center, axis, cps};
}

// ---------------------------------------------------------------------------
// Moebius transformations of the parameter line.

/// Invertible 2x2 matrix acting on column vectors (x0, x1).
class Mobius {
 public:
  using Mat2 = std::array<std::array<Rational, 2>, 2>;

  explicit Mobius(Mat2 m) : m_(std::move(m)) {
    if (determinant() == 0) throw DomainError("Moebius matrix is singular");
  }
  static Mobius identity() { return Mobius(Mat2{{{1, 0}, {0, 1}}}); }

  /// The map sending p -> 0, q -> 1, r -> infinity.
  static Mobius to_standard_frame(const P1Point& p, const P1Point& q, const P1Point& r) {
    // value(z) = det(z,p) det(q,r) / (det(z,r) det(q,p)) with det(x,y) = x0 y1 - x1 y0
    auto d = [](const P1Point& x, const P1Point& y) { return Rational(x[0] * y[1] - x[1] * y[0]); };
    const Rational kqr = d(q, r), kqp = d(q, p);
    if (kqr == 0 || kqp == 0 || d(p, r) == 0) throw DomainError("standard frame needs three distinct points");
    // new x1 = kqr * det(z,p) = kqr * (z0 p1 - z1 p0); new x0 = kqp * det(z,r)
    return Mobius(Mat2{{{kqp * r[1], -kqp * r[0]}, {kqr * p[1], -kqr * p[0]}}});
  }

  const Mat2& matrix() const { return m_; }
  Rational determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

  P1Point operator()(const P1Point& p) const {
    return P1Point(m_[0][0] * p[0] + m_[0][1] * p[1], m_[1][0] * p[0] + m_[1][1] * p[1]);
  }

  friend Mobius operator*(const Mobius& x, const Mobius& y) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) out[i][j] = x.m_[i][0] * y.m_[0][j] + x.m_[i][1] * y.m_[1][j];
    }
    return Mobius(out);
  }

  Mobius inverse() const { return Mobius(Mat2{{{m_[1][1], -m_[0][1]}, {-m_[1][0], m_[0][0]}}}); }

 private:
  Mat2 m_;
};

/// Collineation of the plane; points transform by the matrix, lines by its
/// inverse transpose.
class PlaneMap {
 public:
  explicit PlaneMap(Mat3 m) : m_(std::move(m)) {
    if (pascalgeo::determinant(m_) == 0) throw DomainError("plane map is singular");
  }
  const Mat3& matrix() const { return m_; }
  ProjPoint operator()(const ProjPoint& p) const { return ProjPoint(mat_vec(m_, p.coords())); }
  ProjLine operator()(const ProjLine& l) const { return ProjLine(mat_vec(transpose(adjugate(m_)), l.coords())); }
  /// Pulls a line back: the preimage of l is m^T l.
  ProjLine pull_back(const ProjLine& l) const { return ProjLine(mat_vec(transpose(m_), l.coords())); }

  /// Equality as projective transformations (matrices equal up to scale).
  friend bool operator==(const PlaneMap& x, const PlaneMap& y) {
    std::array<Rational, 9> a, b;
    for (int i = 0; i < 9; ++i) {
      a[i] = x.m_[i / 3][i % 3];
      b[i] = y.m_[i / 3][i % 3];
    }
    for (int i = 0; i < 9; ++i) {
      for (int j = 0; j < 9; ++j) {
        if (a[i] * b[j] != a[j] * b[i]) return false;
      }
    }
    return true;
  }

 private:
  Mat3 m_;
};

/// Symmetric square of m: tau(m p) = induced_plane_map(m)(tau(p)).
inline PlaneMap induced_plane_map(const Mobius& mob) {
  const auto& m = mob.matrix();
  const Rational &al = m[0][0], &be = m[0][1], &ga = m[1][0], &de = m[1][1];
  return PlaneMap(Mat3{{{al * al, 2 * al * be, be * be},
                        {al * ga, al * de + be * ga, be * de},
                        {ga * ga, 2 * ga * de, de * de}}});
}

}  // namespace pascalgeo
