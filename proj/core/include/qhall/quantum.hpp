#pragma once

#include "qhall/laurent.hpp"

namespace qhall {

/// Balanced quantum integer [m]_d = (v^{dm} - v^{-dm}) / (v^d - v^{-d}).
/// d = 1 gives the plain [m]; negative m gives -[-m].
LaurentPoly qint(int m, int d = 1);

/// [m]_d^! = [1]_d [2]_d ... [m]_d, with [0]^! = 1.
LaurentPoly qfact(int m, int d = 1);

/// Quantum binomial [m choose t]_d. Built one exact division at a time; a
/// failed division or a non-integral coefficient throws Errc::Internal.
LaurentPoly qbinom(int m, int t, int d = 1);

/// B_{n,i} = sum_{p=n-i+1}^{n} (-1)^p [2n+1 choose p] [2(n-p)+1].
LaurentPoly b_partial_sum(int n, int i);

/// -(-1)^{n-i} [2n+1 choose n-i] [n+i+1][i] / [n]. The division by [n] must
/// be exact; otherwise Errc::IdentityViolation is thrown.
LaurentPoly b_closed_form(int n, int i);

/// sum_{p=0}^{n} (-1)^{p+1} [2n+1 choose p] [2(n-p)+1], the scalar whose
/// vanishing closes the mixed Serre argument.
LaurentPoly serre_residual_sum(int n);

/// [2i+1][n] - [n+i+1][i] == [n-i][i+1]
bool check_identity_4_2(int n, int i);

}  // namespace qhall
