"""Survey small quadratic deformations: certificate verdict vs oracle verdict.

For a sweep of multiparameter quantum-space tensors q_ij (relations
x_j x_i = (1 - h q_ij) x_i x_j after specialization), compare the sufficient
certificate (quadratic differential), the cyclic coefficient condition, and
the ground-truth generic Hilbert comparison.  With all three parameters
nonzero the condition fails although the algebra is generically PBW: the
certificate is sufficient, not necessary.
"""

from fractions import Fraction
from itertools import product

from pbwlab import QuadData, certify, check_quadratic_condition, from_quadratic, hilbert


def main():
    print(f"{'q12':>4} {'q13':>4} {'q23':>4} {'condition':>10} "
          f"{'certificate':>12} {'generic dims':>20}")
    values = (Fraction(0), Fraction(1), Fraction(2))
    for q12, q13, q23 in product(values, repeat=3):
        alpha = {}
        if q12:
            alpha[(1, 2, 1, 2)] = q12
        if q13:
            alpha[(1, 3, 1, 3)] = q13
        if q23:
            alpha[(2, 3, 2, 3)] = q23
        data = QuadData(3, alpha)
        cond = check_quadratic_condition(data)
        cert = certify(from_quadratic(data), "quadratic")
        rep = hilbert(from_quadratic(data), 4, generic=True)
        note = "  <- PBW without certificate" if rep.all_match and not cert.passed else ""
        print(f"{str(q12):>4} {str(q13):>4} {str(q23):>4} "
              f"{'pass' if cond.passed else 'fail':>10} "
              f"{cert.verdict:>12} {str(rep.dims):>20}{note}")


if __name__ == "__main__":
    main()
