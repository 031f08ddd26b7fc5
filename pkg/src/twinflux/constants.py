"""Physical constants (SI).

epsilon_0 is derived from mu_0 and c so that eps0 * mu0 * c**2 == 1 holds to
machine precision; several gain/intensity identities in this package rely on
that closure being exact in float64.
"""

import scipy.constants as _sc

c = _sc.c
mu_0 = _sc.mu_0
eps_0 = 1.0 / (mu_0 * c * c)
hbar = _sc.hbar

two_pi = 2.0 * _sc.pi
