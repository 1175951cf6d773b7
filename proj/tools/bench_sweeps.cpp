// Times the OpenMP sweeps against their serial references.
#include "normalfield/groupring.hpp"
#include "normalfield/normaltest.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

using namespace nf;

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& name, double serial, double parallel) {
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(3) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint32_t p = argc > 1 ? static_cast<std::uint32_t>(std::atoi(argv[1])) : 2;
  const std::uint32_t k = argc > 2 ? static_cast<std::uint32_t>(std::atoi(argv[2])) : 1;
  const std::uint32_t n = argc > 3 ? static_cast<std::uint32_t>(std::atoi(argv[3])) : 14;
  const auto tower = FieldTower::create(p, k, n);
  const GroupRing ring(tower);
  std::cout << "tower p=" << p << " k=" << k << " n=" << n << ", threads=" << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(28) << "sweep" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "openmp" << std::setw(10) << "speedup" << "\n";

  BigCount a, b;
  const double s1 = seconds([&] { a = serial::brute_count_normal(*tower); });
  const double p1 = seconds([&] { b = brute_count_normal(*tower); });
  row("brute_count_normal", s1, p1);

  std::size_t c = 0, d = 0;
  const double s2 = seconds([&] { c = serial::enumerate_normal(*tower).size(); });
  const double p2 = seconds([&] { d = enumerate_normal(*tower).size(); });
  row("enumerate_normal", s2, p2);

  std::size_t e = 0, f = 0;
  const double s3 = seconds([&] { e = serial::enumerate_units(ring).size(); });
  const double p3 = seconds([&] { f = enumerate_units(ring).size(); });
  row("enumerate_units", s3, p3);

  if (a != b || c != d || e != f) {
    std::cerr << "serial and parallel results differ\n";
    return 1;
  }
  return 0;
}
