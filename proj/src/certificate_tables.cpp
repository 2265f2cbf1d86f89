// Dual multipliers for the auxiliary LPs, one row per case, one fraction per
// constraint row (A1..A10 or B1..B16), followed by the claimed bound.

#include "ecc/certificates.hpp"

namespace ecc::cert {

namespace {

struct Fraction {
  long num;
  long den;
};

struct RowA {
  int p;
  int q;
  Fraction y[10];
  Fraction bound;
};

struct RowB {
  int p;
  int q;
  Fraction y[16];
  Fraction bound;
};

constexpr RowA kTableA[] = {
    {0, 1, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 2}, {0, 1}, {0, 1}, {1, 16}, {0, 1}}, {3, 8}},
    {0, 2, {{1, 6}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {2, 3}, {0, 1}, {0, 1}, {1, 12}, {0, 1}}, {1, 2}},
    {0, 3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 2}, {1, 6}, {0, 1}, {5, 48}, {1, 12}}, {11, 24}},
    {0, 4, {{0, 1}, {0, 1}, {1, 12}, {0, 1}, {0, 1}, {1, 2}, {1, 6}, {0, 1}, {5, 48}, {1, 30}}, {11, 24}},
    {0, 5, {{0, 1}, {0, 1}, {1, 12}, {1, 30}, {0, 1}, {1, 2}, {1, 6}, {0, 1}, {5, 48}, {0, 1}}, {11, 24}},
    {0, 6, {{0, 1}, {0, 1}, {1, 12}, {1, 30}, {1, 42}, {1, 2}, {1, 6}, {1, 126}, {3, 28}, {0, 1}}, {29, 63}},
};

constexpr RowB kTableB[] = {
    {1, 1, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {4, 7}, {1, 14}}, {3, 7}},
    {1, 2, {{1, 6}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 12}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {7, 12}, {0, 1}}, {1, 2}},
    {1, 3, {{3, 32}, {1, 192}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 64}, {0, 1}, {0, 1}, {0, 1}, {19, 32}, {0, 1}}, {31, 64}},
    {1, 4, {{1, 10}, {1, 30}, {1, 20}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 10}, {0, 1}, {0, 1}, {0, 1}, {3, 5}, {0, 1}}, {1, 2}},
    {1, 5, {{47, 450}, {0, 1}, {13, 900}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {14, 225}, {8, 225}, {0, 1}, {0, 1}, {136, 225}, {1, 450}}, {37, 75}},
    {1, 6, {{3, 28}, {0, 1}, {5, 252}, {17, 1260}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 84}, {11, 252}, {0, 1}, {0, 1}, {17, 28}, {0, 1}}, {125, 252}},
    {1, 7, {{7, 64}, {0, 1}, {37, 2016}, {257, 20160}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {11, 192}, {179, 4032}, {1, 224}, {0, 1}, {39, 64}, {0, 1}}, {2003, 4032}},
    {1, 8, {{1, 9}, {0, 1}, {13, 756}, {23, 1890}, {1, 42}, {0, 1}, {1, 72}, {0, 1}, {0, 1}, {0, 1}, {1, 18}, {17, 378}, {1, 126}, {0, 1}, {11, 18}, {0, 1}}, {94, 189}},
    {1, 9, {{9, 80}, {0, 1}, {41, 2520}, {59, 5040}, {1, 42}, {0, 1}, {1, 40}, {1, 90}, {0, 1}, {0, 1}, {13, 240}, {229, 5040}, {3, 280}, {0, 1}, {49, 80}, {0, 1}}, {2509, 5040}},
    {1, 10, {{5, 44}, {0, 1}, {43, 2772}, {157, 13860}, {1, 42}, {0, 1}, {3, 88}, {2, 99}, {1, 110}, {0, 1}, {7, 132}, {127, 2772}, {1, 77}, {0, 1}, {27, 44}, {0, 1}}, {1381, 2772}},
    {2, 2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 12}, {0, 1}, {0, 1}, {0, 1}, {1, 12}, {1, 6}, {0, 1}}, {1, 2}},
    {2, 3, {{0, 1}, {1, 192}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 64}, {0, 1}, {0, 1}, {0, 1}, {3, 32}, {0, 1}}, {31, 64}},
    {2, 4, {{0, 1}, {1, 30}, {1, 20}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 10}, {0, 1}, {0, 1}, {0, 1}, {1, 10}, {0, 1}}, {1, 2}},
    {2, 5, {{0, 1}, {0, 1}, {13, 900}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {14, 225}, {8, 225}, {0, 1}, {0, 1}, {47, 450}, {1, 450}}, {37, 75}},
    {2, 6, {{0, 1}, {0, 1}, {5, 252}, {17, 1260}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 84}, {11, 252}, {0, 1}, {0, 1}, {3, 28}, {0, 1}}, {125, 252}},
    {2, 7, {{0, 1}, {0, 1}, {37, 2016}, {257, 20160}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {11, 192}, {179, 4032}, {1, 224}, {0, 1}, {7, 64}, {0, 1}}, {2003, 4032}},
    {2, 8, {{0, 1}, {0, 1}, {13, 756}, {23, 1890}, {1, 42}, {0, 1}, {1, 72}, {0, 1}, {0, 1}, {0, 1}, {1, 18}, {17, 378}, {1, 126}, {0, 1}, {1, 9}, {0, 1}}, {94, 189}},
    {2, 9, {{0, 1}, {0, 1}, {41, 2520}, {59, 5040}, {1, 42}, {0, 1}, {1, 40}, {1, 90}, {0, 1}, {0, 1}, {13, 240}, {229, 5040}, {3, 280}, {0, 1}, {9, 80}, {0, 1}}, {2509, 5040}},
    {2, 10, {{0, 1}, {0, 1}, {43, 2772}, {157, 13860}, {1, 42}, {0, 1}, {3, 88}, {2, 99}, {1, 110}, {0, 1}, {7, 132}, {127, 2772}, {1, 77}, {0, 1}, {5, 44}, {0, 1}}, {1381, 2772}},
    {3, 3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 64}, {0, 1}, {0, 1}, {5, 64}, {1, 192}, {0, 1}}, {31, 64}},
    {3, 4, {{0, 1}, {0, 1}, {1, 20}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 10}, {0, 1}, {0, 1}, {1, 10}, {1, 30}, {0, 1}}, {1, 2}},
    {3, 5, {{0, 1}, {0, 1}, {13, 900}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {14, 225}, {8, 225}, {0, 1}, {14, 225}, {0, 1}, {1, 450}}, {37, 75}},
    {3, 6, {{0, 1}, {0, 1}, {5, 252}, {17, 1260}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 84}, {11, 252}, {0, 1}, {5, 84}, {0, 1}, {0, 1}}, {125, 252}},
    {3, 7, {{0, 1}, {0, 1}, {37, 2016}, {257, 20160}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {11, 192}, {179, 4032}, {1, 224}, {11, 192}, {0, 1}, {0, 1}}, {2003, 4032}},
    {3, 8, {{0, 1}, {0, 1}, {13, 756}, {23, 1890}, {1, 42}, {0, 1}, {1, 72}, {0, 1}, {0, 1}, {0, 1}, {1, 18}, {17, 378}, {1, 126}, {1, 18}, {0, 1}, {0, 1}}, {94, 189}},
    {3, 9, {{0, 1}, {0, 1}, {41, 2520}, {59, 5040}, {1, 42}, {0, 1}, {1, 40}, {1, 90}, {0, 1}, {0, 1}, {13, 240}, {229, 5040}, {3, 280}, {13, 240}, {0, 1}, {0, 1}}, {2509, 5040}},
    {3, 10, {{0, 1}, {0, 1}, {43, 2772}, {157, 13860}, {1, 42}, {0, 1}, {3, 88}, {2, 99}, {1, 110}, {0, 1}, {7, 132}, {127, 2772}, {1, 77}, {7, 132}, {0, 1}, {0, 1}}, {1381, 2772}},
    {4, 4, {{0, 1}, {1, 10}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {1, 10}, {0, 1}, {0, 1}, {1, 5}, {1, 20}, {0, 1}}, {1, 2}},
    {4, 5, {{0, 1}, {3, 64}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {3, 64}, {1, 20}, {0, 1}, {23, 160}, {0, 1}, {1, 60}}, {157, 320}},
    {4, 6, {{0, 1}, {5, 112}, {0, 1}, {1, 280}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {5, 112}, {3, 56}, {0, 1}, {1, 7}, {0, 1}, {0, 1}}, {55, 112}},
    {4, 7, {{0, 1}, {39, 896}, {0, 1}, {1, 280}, {1, 42}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {39, 896}, {3, 56}, {1, 224}, {9, 64}, {0, 1}, {0, 1}}, {63, 128}},
    {4, 8, {{0, 1}, {43, 1008}, {0, 1}, {1, 280}, {1, 42}, {0, 1}, {1, 72}, {0, 1}, {0, 1}, {0, 1}, {43, 1008}, {3, 56}, {1, 126}, {5, 36}, {0, 1}, {0, 1}}, {71, 144}},
    {4, 9, {{0, 1}, {47, 1120}, {0, 1}, {1, 280}, {1, 42}, {0, 1}, {1, 40}, {1, 90}, {0, 1}, {0, 1}, {47, 1120}, {3, 56}, {3, 280}, {11, 80}, {0, 1}, {0, 1}}, {79, 160}},
    {4, 10, {{0, 1}, {51, 1232}, {0, 1}, {1, 280}, {1, 42}, {0, 1}, {3, 88}, {2, 99}, {1, 110}, {0, 1}, {51, 1232}, {3, 56}, {1, 77}, {3, 22}, {0, 1}, {0, 1}}, {87, 176}},
    {5, 5, {{0, 1}, {0, 1}, {8, 85}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {8, 85}, {0, 1}, {16, 85}, {0, 1}, {31, 510}}, {41, 85}},
    {5, 6, {{0, 1}, {0, 1}, {8, 85}, {0, 1}, {31, 510}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {8, 85}, {0, 1}, {16, 85}, {0, 1}, {22, 595}}, {41, 85}},
    {5, 7, {{0, 1}, {0, 1}, {8, 85}, {0, 1}, {31, 510}, {22, 595}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {8, 85}, {0, 1}, {16, 85}, {0, 1}, {13, 680}}, {41, 85}},
    {5, 8, {{0, 1}, {0, 1}, {8, 85}, {0, 1}, {31, 510}, {22, 595}, {13, 680}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {8, 85}, {0, 1}, {16, 85}, {0, 1}, {4, 765}}, {41, 85}},
    {5, 9, {{0, 1}, {0, 1}, {3, 32}, {0, 1}, {29, 480}, {41, 1120}, {1, 40}, {1, 90}, {0, 1}, {0, 1}, {0, 1}, {3, 32}, {1, 640}, {3, 16}, {0, 1}, {0, 1}}, {309, 640}},
    {5, 10, {{0, 1}, {0, 1}, {41, 440}, {0, 1}, {79, 1320}, {111, 3080}, {3, 88}, {2, 99}, {1, 110}, {0, 1}, {0, 1}, {41, 440}, {7, 1760}, {41, 220}, {0, 1}, {0, 1}}, {851, 1760}},
};

Rational frac(Fraction f) { return Rational(f.num) / Rational(f.den); }

template <typename Row>
DualCertificate to_certificate(Family family, const Row& row) {
  DualCertificate c;
  c.family = family;
  c.p = row.p;
  c.q = row.q;
  for (const auto& f : row.y) c.duals.push_back(frac(f));
  c.claimed = frac(row.bound);
  return c;
}

}  // namespace

const std::vector<DualCertificate>& embedded_certificates() {
  static const std::vector<DualCertificate> certs = [] {
    std::vector<DualCertificate> out;
    for (const auto& row : kTableA) out.push_back(to_certificate(Family::A, row));
    for (const auto& row : kTableB) out.push_back(to_certificate(Family::B, row));
    return out;
  }();
  return certs;
}

}  // namespace ecc::cert
