#pragma once

// Numeric roots by simultaneous Aberth iteration, with residuals re-checked in
// extended precision, inclusion radii, clustering and region tests.

#include "indstab/poly.hpp"

#include <complex>
#include <string>
#include <vector>

namespace indstab {

using Complex = std::complex<double>;

struct RootOptions
{
  // 53 runs in double; anything larger starts directly in MPFR.
  unsigned start_bits = 53;
  unsigned extended_bits = 256;
  unsigned max_bits = 1024;
  int max_sweeps = 500;
  double tolerance = 1e-13;
  // Numeric work refuses polynomials above this degree.
  int max_degree = 2000;
};

class RootsError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct ComplexRootSet
{
  std::vector<Complex> roots;
  // |p(z)| / sum |a_i| |z|^i evaluated in extended precision.
  std::vector<double> residuals;
  // Disk of radius radii[i] about roots[i]; a connected union of m disks holds m roots.
  std::vector<double> radii;
  int degree = 0;
  unsigned precision_bits = 53;
  bool converged = true;
};

auto all_roots(const IntPoly& p, const RootOptions& options = {}) -> ComplexRootSet;

struct RootCluster
{
  Complex centre;
  int multiplicity = 0;
  double radius = 0.0;
};

// Roots whose inclusion disks overlap, or which lie within tol, are merged.
auto clusters(const ComplexRootSet& rs, double tol = 1e-8) -> std::vector<RootCluster>;

struct MaxRealPart
{
  double value = 0.0;
  Complex root;
  double radius = 0.0;
};

auto max_real_part(const ComplexRootSet& rs) -> MaxRealPart;

enum class Membership
{
  inside,
  outside,
  indeterminate,
};

auto to_string(Membership m) -> std::string;

struct RegionSpec
{
  enum class Kind
  {
    rectangle,
    disk,
    halfplane,
  };
  Kind kind = Kind::halfplane;
  // rectangle [re_min, re_max] x [im_min, im_max]; halfplane Re <= re_max
  double re_min = 0, re_max = 0, im_min = 0, im_max = 0;
  Complex centre;
  double radius = 0;

  static auto rectangle(double re_min, double re_max, double im_min, double im_max) -> RegionSpec;
  static auto disk(Complex centre, double radius) -> RegionSpec;
  static auto halfplane(double re_max) -> RegionSpec;
};

struct RegionCheck
{
  std::vector<Membership> members;
  int inside = 0;
  int outside = 0;
  int indeterminate = 0;

  auto all_inside() const -> bool { return outside == 0 && indeterminate == 0; }
};

// Closed regions; a root is decided only when its inclusion disk (plus margin)
// lies entirely on one side of the boundary.
auto in_region(const ComplexRootSet& rs, const RegionSpec& region, double margin = 0.0) -> RegionCheck;

// Roots of i(G^{k*}) from the roots of i(G): z = r / (1 - k r) for each root,
// -1/k with multiplicity n - alpha, and -1/l with multiplicity n 2^(k-l-1).
auto star_root_transfer(const ComplexRootSet& rs, int k, int n) -> ComplexRootSet;

// Smallest positive integer k with k > max Re(r)/|r|^2.
auto kstar_threshold(const ComplexRootSet& rs) -> int;

struct SmallRootCertificate
{
  bool certified = false;
  long n = 0;
  Rational epsilon;
  // Rational point s with -1/ln n < s < 0 and s + (1+s)^n < 0.
  Rational point;
  // Directed-rounding upper bound on s + (1+s)^n.
  std::string upper_bound;
  unsigned precision_bits = 0;
};

// Certifies a root of x + (1+x)^n in (-1/ln n, 0), hence in (-epsilon, 0).
// Throws std::invalid_argument unless n > e^(1/epsilon).
auto star_small_root_check(long n, const Rational& epsilon) -> SmallRootCertificate;

struct DiskCheck
{
  Membership status = Membership::outside;  // outside: every root strictly outside
  int inside = 0;
  int indeterminate = 0;
};

// Position of the roots relative to the closed disk |z - 1/2| <= 1/2.
auto mobius_disk_check(const ComplexRootSet& rs) -> DiskCheck;

} // namespace indstab
