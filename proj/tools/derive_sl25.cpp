// Offline derivation of the SL(2,5) corpus file: brute-force closure over
// 2x2 matrices of determinant 1 mod 5, rendered as a permutation action on
// the 24 nonzero vectors of F_5^2. Regenerate with:
//
//   derive_sl25 [output path]     (default data/sl2_5.grp)
//
// The tool re-loads its own output through the library and checks the
// expected order (120) and center size (2) before declaring success.

#include <array>
#include <fstream>
#include <iostream>
#include <set>
#include <vector>

#include "cdlab/group_io.hpp"
#include "cdlab/subgroup.hpp"

namespace {

constexpr int kP = 5;
using Mat = std::array<int, 4>;  // row-major [[a, b], [c, d]]

Mat mul(const Mat& m, const Mat& k) {
  return {(m[0] * k[0] + m[1] * k[2]) % kP, (m[0] * k[1] + m[1] * k[3]) % kP,
          (m[2] * k[0] + m[3] * k[2]) % kP, (m[2] * k[1] + m[3] * k[3]) % kP};
}

int det(const Mat& m) {
  return ((m[0] * m[3] - m[1] * m[2]) % kP + kP) % kP;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_path = argc > 1 ? argv[1] : "data/sl2_5.grp";

  const Mat a{1, 1, 0, 1};
  const Mat b{0, 1, kP - 1, 0};
  if (det(a) != 1 || det(b) != 1) {
    std::cerr << "generators must have determinant 1\n";
    return 1;
  }

  std::set<Mat> seen{{1, 0, 0, 1}};
  std::vector<Mat> todo{{1, 0, 0, 1}};
  while (!todo.empty()) {
    Mat cur = todo.back();
    todo.pop_back();
    for (const Mat& g : {a, b}) {
      for (const Mat& prod : {mul(cur, g), mul(g, cur)}) {
        if (seen.insert(prod).second) todo.push_back(prod);
      }
    }
  }
  if (seen.size() != 120) {
    std::cerr << "closure has " << seen.size() << " matrices, expected 120\n";
    return 1;
  }
  for (const Mat& m : seen) {
    if (det(m) != 1) {
      std::cerr << "closure left the determinant-1 set\n";
      return 1;
    }
  }

  // enumerate nonzero vectors (x, y) in row-major order; index = 5x + y - 1
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < kP; ++x)
    for (int y = 0; y < kP; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto vindex = [&](int x, int y) { return x * kP + y - 1; };

  auto perm_of = [&](const Mat& m) {
    std::vector<int> img(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      img[i] = vindex((m[0] * x + m[1] * y) % kP, (m[2] * x + m[3] * y) % kP);
    }
    return img;
  };

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 1;
  }
  out << "# SL(2,5): 2x2 matrices of determinant 1 over F_5, acting on the\n";
  out << "# 24 nonzero vectors of F_5^2 (vector (x,y) -> point 5x+y-1).\n";
  out << "# Generators: [[1,1],[0,1]] and [[0,1],[-1,0]].\n";
  out << "# Derived by brute-force matrix closure; see tools/derive_sl25.cpp.\n";
  out << "perm " << vecs.size() << "\n";
  for (const Mat& m : {a, b}) {
    std::vector<int> img = perm_of(m);
    for (std::size_t i = 0; i < img.size(); ++i)
      out << img[i] << (i + 1 < img.size() ? ' ' : '\n');
  }
  out.close();

  // round-trip sanity: order 120, center of order 2
  cdlab::Group g = cdlab::load_group(out_path);
  if (g.order() != 120) {
    std::cerr << "reloaded group has order " << g.order() << ", expected 120\n";
    return 1;
  }
  if (cdlab::center(g).order != 2) {
    std::cerr << "reloaded group has center of order "
              << cdlab::center(g).order << ", expected 2\n";
    return 1;
  }
  std::cout << "wrote " << out_path << " (order 120, |Z| = 2)\n";
  return 0;
}
