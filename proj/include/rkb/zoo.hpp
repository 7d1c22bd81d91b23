#pragma once

#include <string>
#include <vector>

#include "rkb/kernel.hpp"

namespace rkb::zoo {

// Kernels ------------------------------------------------------------------

/// (1 - z conj w)^{-1} on the disk, normalized at 0.
Kernel szego();
/// (1 - z conj w)^{-alpha} via the principal branch.
Kernel szego_pow(double alpha);
/// (z conj w)^{-1} log(1 / (1 - z conj w)), value 1 where z conj w = 0.
Kernel dirichlet_log();
/// min(x, y) on [0, inf).
Kernel min_ray();
/// (1 - b(z) conj b(w)) / (1 - z conj w) with b(z) = (z + 1) / 2.
Kernel dbr_half();
/// zeta(z + conj w) on Re z > 1/2.
Kernel zeta_halfplane();
/// (1 - <z, w>)^{-1} on the unit ball of C^d.
Kernel drury_arveson(int d);
/// (1 - <z, w>)^{-alpha} on the unit ball of C^d.
Kernel da_pow(int d, double alpha);
/// prod_j (1 - z_j conj w_j)^{-1} on the polydisk.
Kernel polydisk_hardy(int d);
/// i if i == j, else 1, on {1, 2, ...}.
Kernel nat_matrix();
Kernel exp_of(const Kernel& k);

double nat_matrix_eval(long i, long j);
cplx db_rovnyak_eval(cplx z, cplx w);

// Maps ----------------------------------------------------------------------

SelfMap identity(const Domain& d = Domain::disk());
SelfMap square();
/// psi_a(z) = (a - z) / (1 - conj(a) z), the involution swapping a and 0.
SelfMap mobius(cplx a);
/// z -> (1 + z) / 2
SelfMap halfway();
/// z -> 1 - (1 - z conj zeta)^alpha
SelfMap hartz(double alpha, cplx zeta);
/// z -> 1 - (1 - <z, zeta>)^alpha from the ball B_d to the disk.
SelfMap ball_hartz(const Point& zeta, double alpha);
/// (z1, z2) -> (z1, z1) on the bidisk.
SelfMap coord_dup();
/// z -> (w_{sigma(0)}, ..., w_{sigma(d-1)}) with w_j = phi_j(z_j).
SelfMap polydisk_product(const std::vector<SelfMap>& factors, const std::vector<int>& sigma);
SelfMap constant(const Point& value, const Domain& d = Domain::disk());

/// Closed form of halfway^n(z) = 1 - (1 - z) / 2^n.
cplx halfway_iterate(cplx z, int n);

// Label grammar ---------------------------------------------------------------
//
// kernels: szego | szego_pow:<a> | dirichlet_log | min_ray | dbr_half |
//          zeta_halfplane | drury_arveson:<d> | da_pow:<d>:<a> |
//          polydisk_hardy:<d> | nat_matrix | exp_of:<kernel>
// maps:    identity | square | mobius:<cplx> | halfway | hartz:<a>:<cplx> |
//          coord_dup | const:<cplx> |
//          polydisk_product:<map>;<map>;...[|<perm>]   e.g. polydisk_product:square;halfway|1,0
// cplx:    a, bi, a+bi, a-bi (no spaces)

Kernel kernel_from_label(const std::string& label);
SelfMap map_from_label(const std::string& label);
cplx parse_complex(const std::string& text);
/// Comma-separated complex tuple, e.g. "1+0i,0+0i".
Point parse_point(const std::string& text);

std::vector<std::string> kernel_labels();
std::vector<std::string> map_labels();

}  // namespace rkb::zoo
