"""Linear-independence certificates for concrete families.

Each member gets the polynomial prod_{d'} (<x, v_i> - d'), reduced with
x_j^2 = 1.  Evaluated at the members it gives a diagonal matrix, so the
polynomials are independent and live in a space of dimension |Q| or |R|.

Run:  python demos/02_certificates.py
"""

from hamsym import (
    AnnihilatorSpec,
    SetFamily,
    build_annihilator,
    build_certificate,
    complete_intersecting_family,
    scalar_product_set,
    distance_set,
    signed_vector,
)
from hamsym.polymethod import format_poly

# %% One annihilator, written out.
fam = complete_intersecting_family(4)
roots = scalar_product_set(distance_set(fam))
p = build_annihilator(AnnihilatorSpec(signed_vector(fam.members[0], 4), roots))
print("roots:", roots)
print("P_1 =", format_poly(p))

# %% The full certificate.
print(build_certificate(fam).to_text())

# %% A family that is not Hamming symmetric: the matrix is still diagonal,
# but the polynomials mix even and odd monomials so no parity budget applies.
cert = build_certificate(SetFamily(4, (0b0000, 0b0001)))
print(cert.verdict, cert.parity_class)
