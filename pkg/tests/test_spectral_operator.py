import math
from fractions import Fraction

import numpy as np
import pytest

from zigzagsums.exact_arith import HALF_PI, PiPoly, VPiPoly
from zigzagsums.special_numbers import zigzag
from zigzagsums.spectral_operator import (
    GridFunction,
    T_POWER_LIMIT,
    apply_T_poly,
    eigenfunction_residual,
    exact_eigenvalue,
    fourier_coeff_const,
    grid_midpoints,
    inner_product_one,
    jacobi_eigenvalues,
    k1,
    nystrom_matrix,
    parseval_sum,
    sym_eigenvalues,
    t_power_one,
    trace_power_nystrom,
)


class TestKernel:
    def test_inside(self):
        assert k1(0.1, 0.2) == 1

    def test_outside(self):
        assert k1(1.0, 1.0) == 0

    def test_boundary_counts_as_outside(self):
        assert k1(math.pi / 4, math.pi / 4) == 0


class TestExactOperator:
    def test_applied_to_one(self):
        expected = VPiPoly.from_dict({0: HALF_PI, 1: PiPoly.rational(-1)})
        assert apply_T_poly(VPiPoly.one()) == expected

    def test_applied_twice(self):
        expected = VPiPoly.from_dict(
            {0: PiPoly.pi_power(2, Fraction(1, 8)), 2: PiPoly.rational(Fraction(-1, 2))}
        )
        assert apply_T_poly(apply_T_poly(VPiPoly.one())) == expected

    def test_applied_to_zero(self):
        assert apply_T_poly(VPiPoly.zero()) == VPiPoly.zero()

    def test_iterates(self):
        assert t_power_one(0) == VPiPoly.one()
        assert t_power_one(1) == apply_T_poly(VPiPoly.one())
        assert t_power_one(2) == apply_T_poly(t_power_one(1))

    def test_iterate_degree_and_root(self):
        for n in range(1, 13):
            iterate = t_power_one(n)
            assert iterate.degree() == n
            # vanishes identically at v = pi/2
            assert iterate.evaluate(HALF_PI).is_zero()

    def test_iterate_cap(self):
        with pytest.raises(ValueError):
            t_power_one(T_POWER_LIMIT + 1)

    def test_inner_products(self):
        assert inner_product_one(1) == HALF_PI
        assert inner_product_one(2) == PiPoly.pi_power(2, Fraction(1, 8))
        # integral of pi^2/8 - v^2/2 over (0, pi/2) = pi^3/16 - pi^3/48 = pi^3/24
        assert inner_product_one(3) == PiPoly.pi_power(3, Fraction(1, 24))

    def test_pure_monomial_identity(self):
        # the operator route reproduces the zigzag counts exactly
        for n in range(1, 21):
            value = inner_product_one(n)
            expected = Fraction(zigzag(n), math.factorial(n) * 2**n)
            assert value.terms == ((n, expected),)


class TestFourier:
    def test_leading_coefficient(self):
        assert fourier_coeff_const(0) == pytest.approx(4 / math.pi, abs=1e-15)

    def test_negative_mode(self):
        assert fourier_coeff_const(-1) == pytest.approx(-(4 / math.pi) / 3, abs=1e-15)

    def test_against_quadrature(self):
        # oracle: 64-node Gauss-Legendre quadrature of (4/pi) cos(5u) on (0, pi/2)
        nodes, weights = np.polynomial.legendre.leggauss(64)
        u = (nodes + 1) * math.pi / 4
        w = weights * math.pi / 4
        quad = float(np.sum(w * np.cos(5 * u))) * 4 / math.pi
        assert fourier_coeff_const(1) == pytest.approx(quad, abs=1e-12)

    def test_parseval_norm(self):
        assert parseval_sum(0, 10**5) == pytest.approx(math.pi / 2, abs=1e-4)

    def test_parseval_weighted(self):
        assert parseval_sum(1, 10**4) == pytest.approx(math.pi**2 / 8, abs=1e-6)

    def test_parseval_single_term(self):
        assert parseval_sum(5, 0) == pytest.approx(4 / math.pi, abs=1e-15)

    def test_parseval_converges_to_inner_product(self):
        for n in (2, 3):
            target = inner_product_one(n).to_float()
            coarse = abs(parseval_sum(n - 1, 10) - target)
            fine = abs(parseval_sum(n - 1, 1000) - target)
            assert fine < coarse / 100


class TestNystromMatrix:
    def test_two_by_two_derived_from_kernel(self):
        matrix = nystrom_matrix(2)
        w = math.pi / 4
        mids = grid_midpoints(2)
        assert mids == pytest.approx([math.pi / 8, 3 * math.pi / 8])
        derived = [[k1(mids[i], mids[j]) * w for j in range(2)] for i in range(2)]
        assert np.array_equal(matrix.entries, derived)
        # the off-diagonal midpoints sum exactly to pi/2, which the open
        # triangle excludes, so those entries are 0
        assert derived == [[w, 0.0], [0.0, 0.0]]

    def test_entries_binary(self):
        matrix = nystrom_matrix(64)
        w = matrix.weight
        assert np.isin(matrix.entries, (0.0, w)).all()

    def test_symmetry(self):
        matrix = nystrom_matrix(129)
        assert np.array_equal(matrix.entries, matrix.entries.T)

    def test_row_sums_approximate_operator_on_one(self):
        N = 500
        matrix = nystrom_matrix(N)
        applied = matrix.apply(GridFunction.ones(N))
        expected = math.pi / 2 - grid_midpoints(N)
        assert np.max(np.abs(applied.values - expected)) < 2 * (math.pi / 2) / N

    def test_grid_too_small(self):
        with pytest.raises(ValueError):
            nystrom_matrix(1)


class TestEigenvalues:
    def test_top_three_near_exact(self):
        top = sym_eigenvalues(nystrom_matrix(400), 3)
        for rank, value in enumerate(top):
            exact = exact_eigenvalue(rank)
            assert abs(value - exact) < 0.01 * abs(exact)

    def test_exact_sequence(self):
        assert [exact_eigenvalue(r) for r in range(5)] == pytest.approx(
            [1, -1 / 3, 1 / 5, -1 / 7, 1 / 9]
        )

    def test_top_five_distinct_at_production_grid(self):
        top5 = sym_eigenvalues(nystrom_matrix(2000), 5)
        exact = [exact_eigenvalue(r) for r in range(5)]
        for i in range(5):
            for j in range(i + 1, 5):
                gap = abs(top5[i] - top5[j])
                assert gap > 10 * 0.01 * max(abs(exact[i]), abs(exact[j]))

    def test_jacobi_agrees_with_lapack(self):
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence(7)))
        a = rng.normal(size=(40, 40))
        a = (a + a.T) / 2
        ours = np.sort(jacobi_eigenvalues(a))
        lapack = np.sort(np.linalg.eigvalsh(a))
        assert np.max(np.abs(ours - lapack)) < 1e-9

    def test_jacobi_method_on_kernel_matrix(self):
        matrix = nystrom_matrix(120)
        jac = sym_eigenvalues(matrix, 3, method="jacobi")
        lap = sym_eigenvalues(matrix, 3, method="lapack")
        assert jac == pytest.approx(lap, abs=1e-9)

    def test_jacobi_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.array([[0.0, 1.0], [0.5, 0.0]]))

    def test_top_bound(self):
        with pytest.raises(ValueError):
            sym_eigenvalues(nystrom_matrix(8), 9)


class TestTraces:
    def test_square_trace_identity(self):
        matrix = nystrom_matrix(100)
        assert trace_power_nystrom(100, 2) == pytest.approx(
            float(np.sum(matrix.entries**2)), abs=1e-12
        )

    def test_traces_near_exact(self):
        assert trace_power_nystrom(800, 2) == pytest.approx(math.pi**2 / 8, rel=0.01)
        assert trace_power_nystrom(800, 3) == pytest.approx(math.pi**3 / 32, rel=0.01)

    def test_spectral_sum_equals_trace(self):
        N = 300
        eigenvalues = np.linalg.eigvalsh(nystrom_matrix(N).entries)
        for n in (2, 3, 4):
            assert trace_power_nystrom(N, n) == pytest.approx(
                float(np.sum(eigenvalues**n)), abs=1e-10
            )

    def test_truncated_spectral_sum(self):
        # top 21 eigenvalues carry all but the analytic tail of the cube sum
        N = 400
        top = sym_eigenvalues(nystrom_matrix(N), 21)
        partial = sum(v**3 for v in top)
        tail = 2 * sum((4 * k - 3.0) ** -3 for k in range(11, 10000))
        assert abs(trace_power_nystrom(N, 3) - partial) < tail + 1e-6

    def test_low_power_rejected(self):
        with pytest.raises(ValueError):
            trace_power_nystrom(100, 1)


class TestEigenfunctionResidual:
    def test_fundamental_mode(self):
        assert eigenfunction_residual(0, 1000) < 1e-5

    def test_negative_mode(self):
        assert eigenfunction_residual(-1, 1000) < 1e-4

    def test_higher_mode(self):
        assert eigenfunction_residual(2, 2000) < 1e-4

    def test_residual_shrinks_quadratically(self):
        coarse = eigenfunction_residual(0, 200)
        fine = eigenfunction_residual(0, 800)
        assert fine < coarse / 8  # midpoint rule is second order

    def test_minimum_grid(self):
        with pytest.raises(ValueError):
            eigenfunction_residual(0, 50)
