import pytest
from hypothesis import given, strategies as st

from dvbsig.algebra import (
    Fp2Element,
    FpElement,
    byte_width,
    encode_int,
    is_prime,
    legendre,
    mod_inv,
    sample_unit,
    sqrt_mod,
)
from dvbsig.errors import DomainError, InversionOfZero, ParamMismatch
from dvbsig.rng import SeededRng

P = 311  # toy curve modulus, 3 mod 4
Q = 13  # toy subgroup order

fp_values = st.integers(min_value=0, max_value=P - 1)


class TestModInv:
    def test_identity(self):
        assert mod_inv(1, 13) == 1

    def test_hand_checked(self):
        # extended Euclid by hand: 2 * 7 = 14 = 1 (mod 13)
        assert mod_inv(2, 13) == 7
        assert 2 * mod_inv(2, 13) % 13 == 1

    def test_zero_rejected(self):
        with pytest.raises(InversionOfZero):
            mod_inv(0, 13)
        with pytest.raises(InversionOfZero):
            mod_inv(26, 13)

    @given(st.integers(min_value=1, max_value=P - 1))
    def test_involution(self, a):
        assert mod_inv(mod_inv(a, P), P) == a


class TestSqrt:
    def test_zero(self):
        assert sqrt_mod(0, P) == 0

    def test_small_square(self):
        assert sqrt_mod(4, P) == 2  # the smaller of {2, 309}

    def test_exponent_route(self):
        # (P+1)/4 = 78; 2^78 mod 311 must square back to 2
        candidate = pow(2, 78, P)
        assert candidate * candidate % P == 2
        assert sqrt_mod(2, P) == min(candidate, P - candidate)

    def test_wrong_modulus_class(self):
        with pytest.raises(DomainError):
            sqrt_mod(4, 13 * 4 + 1)  # 53 = 1 mod 4

    @given(fp_values)
    def test_root_or_nonresidue(self, a):
        root = sqrt_mod(a, P)
        if root is None:
            assert legendre(a, P) == -1
        else:
            assert root * root % P == a % P
            assert root <= P - root


class TestFpElement:
    def test_arithmetic(self):
        a = FpElement(200, P)
        b = FpElement(150, P)
        assert (a + b).value == 39
        assert (a - b).value == 50
        assert (a * b).value == 200 * 150 % P
        assert (-a).value == P - 200

    def test_mismatched_moduli(self):
        with pytest.raises(ParamMismatch):
            FpElement(1, P) + FpElement(1, 13)

    @given(st.integers(min_value=1, max_value=P - 1))
    def test_inverse(self, a):
        el = FpElement(a, P)
        assert (el * el.inverse()).value == 1


class TestFp2:
    def test_multiplicative_identity(self):
        one = Fp2Element.one(P)
        z = Fp2Element(17, 42, P)
        assert one * z == z

    def test_i_squared_is_minus_one(self):
        i = Fp2Element(0, 1, P)
        assert i * i == Fp2Element(P - 1, 0, P)

    def test_hand_product(self):
        # (2+3i)(4+5i) = (8-15) + (10+12)i = -7 + 22i
        lhs = Fp2Element(2, 3, P) * Fp2Element(4, 5, P)
        assert lhs == Fp2Element(304, 22, P)

    def test_mismatched_moduli(self):
        with pytest.raises(ParamMismatch):
            Fp2Element(1, 0, P) * Fp2Element(1, 0, 13)

    def test_zero_inverse_rejected(self):
        with pytest.raises(InversionOfZero):
            Fp2Element.zero(P).inverse()

    @given(fp_values, fp_values, fp_values, fp_values, fp_values, fp_values)
    def test_ring_axioms(self, a, b, c, d, e, f):
        x = Fp2Element(a, b, P)
        y = Fp2Element(c, d, P)
        z = Fp2Element(e, f, P)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(fp_values, fp_values)
    def test_lagrange_order(self, a, b):
        x = Fp2Element(a, b, P)
        if not x.is_zero():
            assert (x ** (P * P - 1)).is_one()

    @given(fp_values, fp_values)
    def test_inverse_roundtrip(self, a, b):
        x = Fp2Element(a, b, P)
        if not x.is_zero():
            assert (x * x.inverse()).is_one()
            assert x ** (-2) == (x.inverse()) ** 2

    def test_conjugate_is_frobenius(self):
        x = Fp2Element(123, 45, P)
        assert x.conjugate() == x**P


class TestEncoding:
    def test_widths(self):
        assert byte_width(311) == 2
        assert byte_width(13) == 1
        assert byte_width(2**159 + 2**17 + 1) == 20

    def test_roundtrip(self):
        for v in (0, 1, 310):
            assert int.from_bytes(encode_int(v, P), "big") == v
            assert len(encode_int(v, P)) == 2

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            encode_int(311, P)
        with pytest.raises(ValueError):
            encode_int(-1, P)


class TestSampleUnit:
    def test_range_forced_for_tiny_order(self):
        rng = SeededRng("q3")
        draws = {sample_unit(rng, 3) for _ in range(200)}
        assert draws == {1, 2}

    def test_distribution_and_exclusions(self):
        rng = SeededRng("dist")
        counts = [0] * Q
        n = 10_000
        for _ in range(n):
            counts[sample_unit(rng, Q)] += 1
        assert counts[0] == 0
        assert all(counts[v] > 0 for v in range(1, Q))
        # chi-square against uniform over 12 cells, 1% critical value
        expected = n / 12
        chi2 = sum((counts[v] - expected) ** 2 / expected for v in range(1, Q))
        assert chi2 < 24.725  # df = 11, upper 1% point

    def test_deterministic_replay(self):
        first = SeededRng("replay")
        second = SeededRng("replay")
        assert [sample_unit(first, Q) for _ in range(64)] == [
            sample_unit(second, Q) for _ in range(64)
        ]

    def test_too_small_order(self):
        with pytest.raises(DomainError):
            sample_unit(SeededRng("x"), 2)


class TestPrimality:
    def test_small_cases(self):
        assert is_prime(2) and is_prime(3) and is_prime(13) and is_prime(311)
        assert not is_prime(1) and not is_prime(0) and not is_prime(155)

    def test_solinas_prime(self):
        assert is_prime(2**159 + 2**17 + 1)

    def test_carmichael_rejected(self):
        assert not is_prime(561)
        assert not is_prime(41041)

    @given(st.integers(min_value=2, max_value=2000))
    def test_against_trial_division(self, n):
        by_trial = all(n % d for d in range(2, int(n**0.5) + 1))
        assert is_prime(n) == by_trial
