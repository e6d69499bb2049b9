#include <doctest.h>

#include "quatsurf/split.hpp"
#include "support/generators.hpp"

using namespace quatsurf;

namespace {
const Quaternion I = Quaternion::i(), J = Quaternion::j(), K = Quaternion::k();
const QPolyUV U = QPolyUV::u(), V = QPolyUV::v();

ErrorKind split_error(const Mat2& m) {
  try {
    (void)split(m);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("split unexpectedly succeeded");
  return ErrorKind::IoError;
}

QPolyUV random_h_u(testing::Rng& rng, int du, long bound) { return testing::qpoly_uv(rng, du, 0, bound); }
}  // namespace

TEST_CASE("zero matrix follows the fixed convention") {
  const auto cert = split(Mat2());
  CHECK(cert.x == Vec2{QPolyUV(), QPolyUV()});
  CHECK(cert.y == Vec2{QPolyUV(1), QPolyUV()});
}

TEST_CASE("split examples") {
  const Mat2 m(QPolyUV(1), V, U, U * V);
  CHECK(kron(split(m).x, split(m).y) == m);
  const Mat2 p(QPolyUV(5), QPolyUV(Quaternion(3, 4, 0, 0)), QPolyUV(Quaternion(3, -4, 0, 0)), QPolyUV(5));
  const auto cert = split(p);
  CHECK(verify(cert, p));
}

TEST_CASE("base cases with a vanishing entry") {
  const QPolyUV a = QPolyUV(I) * U + QPolyUV(1), b = QPolyUV(J) * V;
  // zero column and zero row, in every position
  for (const Mat2& m : {Mat2(a, b, QPolyUV(), QPolyUV()), Mat2(a, QPolyUV(), b, QPolyUV()),
                        Mat2(QPolyUV(), QPolyUV(), a, b), Mat2(QPolyUV(), a, QPolyUV(), b)}) {
    REQUIRE(verify(split(m), m));
  }
  // a single nonzero entry
  REQUIRE(verify(split(Mat2(QPolyUV(), QPolyUV(), QPolyUV(), a * b)), Mat2(QPolyUV(), QPolyUV(), QPolyUV(), a * b)));
}

TEST_CASE("v-free reduction needs several division steps") {
  // x = (1 + u^2 i, u + j), y = (u^2 + k, 1 + u i)
  const Vec2 x{QPolyUV(1) + QPolyUV(I) * U * U, U + QPolyUV(J)};
  const Vec2 y{U * U + QPolyUV(K), QPolyUV(1) + QPolyUV(I) * U};
  const Mat2 m = kron(x, y);
  SplitTrace trace;
  const auto cert = split(m, &trace);
  CHECK(verify(cert, m));
  CHECK(trace.vfree_steps >= 1);
  CHECK(trace.vlinear_steps == 0);
}

TEST_CASE("v-linear reduction on both factor shapes") {
  // v in the left factor, then in the right factor
  const Vec2 vx{QPolyUV(1) + QPolyUV(I) * V, U + QPolyUV(J) * U * V};
  const Vec2 fy{U + QPolyUV(K), QPolyUV(2) + QPolyUV(I) * U * U};
  for (const Mat2& m : {kron(vx, fy), kron(fy, vx)}) {
    SplitTrace trace;
    REQUIRE(verify(split(m, &trace), m));
    CHECK(trace.vlinear_steps >= 1);
    CHECK(trace.fallback_pivots == 0);
  }
}

TEST_CASE("precondition errors") {
  CHECK(split_error(Mat2(V * V, QPolyUV(), QPolyUV(), QPolyUV())) == ErrorKind::PreconditionDegree);
  CHECK(split_error(Mat2(QPolyUV(1), QPolyUV(), QPolyUV(), QPolyUV(1))) == ErrorKind::NotDegenerate);
  CHECK(split_error(Mat2(U, V, QPolyUV(1), QPolyUV(I))) == ErrorKind::NotDegenerate);
}

TEST_CASE("round trip on random products") {
  testing::Rng rng(41);
  SplitTrace trace;
  for (int n = 0; n < 150; ++n) {
    const Vec2 x{random_h_u(rng, 2, 9), random_h_u(rng, 2, 9)};
    const Vec2 y{testing::qpoly_uv(rng, 2, 1, 9), testing::qpoly_uv(rng, 2, 1, 9)};
    const Mat2 m = n % 2 == 0 ? kron(x, y) : kron(y, x);
    const auto cert = split(m, &trace);
    REQUIRE(verify(cert, m));
  }
  CHECK(trace.fallback_pivots == 0);
}

TEST_CASE("v-free degenerate matrices split") {
  testing::Rng rng(42);
  for (int n = 0; n < 100; ++n) {
    const Vec2 x{random_h_u(rng, 3, 9), random_h_u(rng, 3, 9)};
    const Vec2 y{random_h_u(rng, 3, 9), random_h_u(rng, 3, 9)};
    const Mat2 m = kron(x, y);
    REQUIRE(verify(split(m), m));
  }
}

TEST_CASE("split is equivariant under conjugate transpose") {
  testing::Rng rng(43);
  for (int n = 0; n < 80; ++n) {
    Mat2 m;
    if (n % 3 == 0) {
      m = Mat2(testing::qpoly_uv(rng, 1, 1, 5), testing::qpoly_uv(rng, 1, 1, 5), testing::qpoly_uv(rng, 1, 1, 5),
               testing::qpoly_uv(rng, 1, 1, 5));
    } else {
      m = kron({random_h_u(rng, 2, 9), random_h_u(rng, 2, 9)},
               {testing::qpoly_uv(rng, 2, 1, 9), testing::qpoly_uv(rng, 2, 1, 9)});
    }
    bool ok = true, ok_t = true;
    try {
      (void)split(m);
    } catch (const Error&) {
      ok = false;
    }
    try {
      (void)split(conj_transpose(m));
    } catch (const Error&) {
      ok_t = false;
    }
    REQUIRE(ok == ok_t);
  }
}

TEST_CASE("normalization") {
  const SplitCertificate c{{QPolyUV(I), QPolyUV()}, {QPolyUV(1), QPolyUV(1)}};
  const auto n = split_normalize(c);
  CHECK(n.x == Vec2{QPolyUV(1), QPolyUV()});
  CHECK(n.y == Vec2{QPolyUV(I), QPolyUV(I)});
  CHECK(kron(n.x, n.y) == kron(c.x, c.y));
  CHECK(split_normalize(n) == n);
  const SplitCertificate zero{{QPolyUV(), QPolyUV()}, {QPolyUV(1), QPolyUV()}};
  CHECK(split_normalize(zero) == zero);

  testing::Rng rng(44);
  for (int k = 0; k < 50; ++k) {
    const Mat2 m = kron({random_h_u(rng, 2, 9), random_h_u(rng, 2, 9)},
                        {testing::qpoly_uv(rng, 2, 1, 9), testing::qpoly_uv(rng, 2, 1, 9)});
    const auto cert = split_normalize(split(m));
    REQUIRE(verify(cert, m));
    const QPolyUV& first = !cert.x.e1.is_zero() ? cert.x.e1 : cert.x.e2;
    if (!first.is_zero()) REQUIRE(first.leading_coeff() == Quaternion(1));
  }
}
