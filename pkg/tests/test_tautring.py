from itertools import permutations
import json
import random

import pytest

from app.core.exceptions import (
    ExpressionSyntaxError,
    IndexRangeError,
    NotTopDegreeError,
    ShapeMismatchError,
    UsageError,
)
from app.exactnum.parser import parse_scalar
from app.schemas.taut import TautClassModel, class_json, class_schema
from app.tautring.correspondence import Correspondence, act, compose, identity
from app.tautring.expression import infer_factor_count, parse_expr, round_trip
from app.tautring.monomial import Flavor
from app.tautring.printing import class_latex, class_text
from app.tautring.projectors import kunneth_projector
from app.tautring.taut_class import TautClass

RELATIVE = Flavor.RELATIVE
POINTED = Flavor.POINTED


class TestNormalization:

    def test_diagonal_square(self, rel):
        square = rel("D(1,2)*D(1,2)", 2)
        assert square == -rel("D(1,2)*psi(1)", 2)
        assert class_text(square) == "-D(1,2)*psi(1)"

    def test_psi_moves_to_block_representative(self, rel):
        assert rel("D(1,2)*psi(2)", 2) == rel("D(1,2)*psi(1)", 2)

    def test_disjoint_product(self, rel):
        assert class_text(rel("D(1,2)", 2) * rel("psi(1)", 2)) == "D(1,2)*psi(1)"

    def test_pointed_divisor_square_vanishes(self, pt):
        assert pt("K(1)*o(1)", 2).is_zero()
        assert pt("o(1)*o(1)", 1).is_zero()
        assert pt("psi(1)^2", 1).is_zero()

    def test_pointed_kappa_vanishes(self, pt):
        assert pt("kappa(1)*o(1)", 1).is_zero()
        assert pt("kappa(0)", 1) == pt("2*g - 2", 1)

    def test_base_point_on_diagonal_splits(self, pt):
        assert pt("D(1,2)*o(1)", 2) == pt("o(1)*o(2)", 2)

    def test_order_independence(self):
        factors = [("D", (1, 2)), ("D", (2, 3)), ("psi", 3, 1), ("D", (1, 3)), ("kappa", 2, 1)]
        results = {TautClass.from_factors(3, RELATIVE, list(order)) for order in permutations(factors)}
        assert len(results) == 1

    def test_pointed_order_independence(self):
        factors = [("D", (1, 2)), ("K", 3), ("D", (2, 3))]
        results = {TautClass.from_factors(3, POINTED, list(order)) for order in permutations(factors)}
        assert len(results) == 1
        assert not results.pop().is_zero()

    def test_products_commute(self, rel):
        a = rel("D(1,2) + psi(3)", 3)
        b = rel("D(2,3)*psi(1) - kappa(1)", 3)
        assert a * b == b * a
        assert (a * b) * a == a * (b * a)

    def test_shape_mismatch(self, rel, pt):
        with pytest.raises(ShapeMismatchError):
            rel("psi(1)", 1) * rel("psi(1)", 2)
        with pytest.raises(ShapeMismatchError):
            rel("psi(1)", 2) + pt("K(1)", 2)


class TestPullbackPushforward:

    def test_pullback_relabels(self, rel):
        assert rel("psi(1)", 1).pullback({1: 2}, 2) == rel("psi(2)", 2)
        assert rel("D(1,2)", 2).pullback({1: 2, 2: 4}, 4) == rel("D(2,4)", 4)

    def test_pullback_must_be_injective(self, rel):
        with pytest.raises(ShapeMismatchError):
            rel("D(1,2)", 2).pullback({1: 1, 2: 1}, 2)

    def test_push_psi_power_gives_kappa(self, rel):
        assert rel("psi(2)^2", 2).pushforward(2) == rel("kappa(1)", 1)

    def test_push_psi_gives_canonical_degree(self, rel, c):
        assert rel("psi(2)", 2).pushforward(2) == TautClass.scalar(1, RELATIVE, c)

    def test_push_along_diagonal(self, rel):
        assert rel("D(1,2)*psi(2)^3", 2).pushforward(2) == rel("psi(1)^3", 1)

    def test_push_fundamental_class(self):
        assert TautClass.one(2, RELATIVE).pushforward(2).is_zero()

    def test_pointed_push(self, pt, c):
        assert pt("o(2)", 2).pushforward(2) == TautClass.one(1, POINTED)
        assert pt("K(2)", 2).pushforward(2) == TautClass.scalar(1, POINTED, c)
        assert pt("o(1)", 2).pushforward(2).is_zero()

    def test_projection_formula(self, rel):
        beta = rel("psi(1) + kappa(1)", 1)
        alpha = rel("D(1,2)*psi(2) + psi(2)^2 + kappa(1)*psi(1)*psi(2)", 2)
        lifted = beta.pullback({1: 1}, 2)
        assert (lifted * alpha).pushforward(2) == beta * alpha.pushforward(2)


class TestRestrictionAndDegree:

    def test_restrict_kills_kappa(self, rel):
        assert rel("kappa(2)", 1).restrict().is_zero()

    def test_restrict_turns_psi_into_k(self, rel, pt):
        assert rel("D(1,2)*psi(1) + psi(1)*psi(2)", 2).restrict() == pt("D(1,2)*K(1) + K(1)*K(2)", 2)

    def test_degree(self, pt, c):
        assert pt("K(1)*K(2)", 2).degree(2) == c ** 2
        assert pt("D(1,2)*K(1)", 2).degree(2) == c
        assert pt("o(1)*o(2) - D(1,2)*o(1)", 2).degree().is_zero()

    def test_degree_needs_top_codimension(self, pt, rel):
        with pytest.raises(NotTopDegreeError):
            pt("K(1)", 2).degree()
        with pytest.raises(ShapeMismatchError):
            rel("psi(1)*psi(2)", 2).degree()


class TestExpressions:

    def test_index_out_of_range(self):
        with pytest.raises(IndexRangeError) as error:
            parse_expr("psi(3)", 2)
        assert error.value.position == 4

    def test_repeated_diagonal_index(self):
        with pytest.raises(IndexRangeError):
            parse_expr("D(1,1)", 2)

    def test_diagonal_needs_two_indices(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_expr("D(1)", 2)

    def test_pointed_generators_need_pointed_flavor(self):
        with pytest.raises(UsageError):
            parse_expr("K(1)", 1, RELATIVE)

    def test_truncated_expression(self):
        with pytest.raises(ExpressionSyntaxError) as error:
            parse_expr("psi(1) +", 1)
        assert error.value.position == 8

    def test_scalar_expression_becomes_class(self, c):
        assert parse_expr("2*g - 2", 3) == TautClass.scalar(3, RELATIVE, c)

    @pytest.mark.parametrize("text", [
        "D(1,2)*psi(1) - 1/(2*g-2)*psi(1)*psi(2)",
        "3 - g",
        "(g-3)*kappa(1)^2 + psi(1)",
        "-psi(1)^2/(g+1) + kappa(2)*psi(2)",
        "D(1,2)^3",
    ])
    def test_round_trip_relative(self, text):
        assert round_trip(text, 2, RELATIVE)

    @pytest.mark.parametrize("text", [
        "K(1)*K(2) - (2*g-2)*D(1,2)*K(1)",
        "o(1)*o(2) + 1/(g-1)*K(1)",
    ])
    def test_round_trip_pointed(self, text):
        assert round_trip(text, 2, POINTED)


class TestPrinting:

    def test_zero(self):
        assert class_text(TautClass.zero(2, RELATIVE)) == "0"

    def test_negative_scalar_keeps_parentheses(self, rel):
        assert class_text(rel("3 - g", 1)) == "-(g - 3)"

    def test_coefficient_and_monomial(self, rel):
        assert class_text(rel("2*psi(1)", 1)) == "2*psi(1)"
        assert class_text(rel("(g-1)*psi(1)", 1)) == "(g - 1)*psi(1)"

    def test_latex(self, rel):
        assert class_latex(rel("D(1,2)*psi(1)^2", 2)) == "\\Delta_{12} \\psi_{1}^{2}"
        assert class_latex(rel("kappa(1)", 1)) == "\\kappa_{1}"


class TestJson:

    def test_class_json(self, rel):
        data = class_json(rel("D(1,2)*psi(1)", 2))
        assert data["n"] == 2
        assert data["flavor"] == "relative"
        assert data["terms"] == [{
            "partition": [[1, 2]],
            "psi": [1],
            "kappa": [],
            "decor": None,
            "coeff": {"num": "1", "den": "1"},
        }]

    def test_pointed_decorations(self, pt):
        term = class_json(pt("K(1)*o(2)", 2))["terms"][0]
        assert term["decor"] == ["K", "o"]

    def test_schema(self):
        schema = class_schema()
        assert set(schema["properties"]) == {"n", "flavor", "terms"}


@pytest.mark.parametrize("text,expected", [
    ("0", 0),
    ("kappa(3)", 0),
    ("D(1,4)*psi(2)", 4),
    ("K(2) - o( 3 )", 3),
])
def test_infer_factor_count(text, expected):
    assert infer_factor_count(text) == expected


COEFFICIENTS = ["1", "2", "3/5", "(g-1)", "1/(2*g-2)", "(g+3)/7"]


def random_factors(rng, n, flavor, max_degree):
    factors = []
    degree = 0
    while degree < max_degree:
        kinds = ["psi", "kappa"] if flavor is RELATIVE else ["K", "o"]
        if n >= 2:
            kinds.append("D")
        kind = rng.choice(kinds)
        if kind == "D":
            factors.append(("D", tuple(sorted(rng.sample(range(1, n + 1), 2)))))
            degree += 1
        elif kind == "psi":
            power = rng.randint(1, 2)
            factors.append(("psi", rng.randint(1, n), power))
            degree += power
        elif kind == "kappa":
            index = rng.randint(1, 2)
            factors.append(("kappa", index, 1))
            degree += index
        else:
            factors.append((kind, rng.randint(1, n)))
            degree += 1
        if rng.random() < 0.3:
            break
    return factors


def factor_text(factor):
    if factor[0] == "D":
        return f"D({factor[1][0]},{factor[1][1]})"
    if factor[0] == "psi":
        return f"psi({factor[1]})^{factor[2]}"
    if factor[0] == "kappa":
        return f"kappa({factor[1]})"
    return f"{factor[0]}({factor[1]})"


class TestRandomized:

    @pytest.mark.parametrize("flavor", [RELATIVE, POINTED])
    def test_rewrite_order_is_confluent(self, flavor):
        rng = random.Random(1)
        for _ in range(100):
            n = rng.randint(2, 4)
            factors = random_factors(rng, n, flavor, 6)
            reference = TautClass.from_factors(n, flavor, factors)
            for _ in range(3):
                shuffled = factors[:]
                rng.shuffle(shuffled)
                assert TautClass.from_factors(n, flavor, shuffled) == reference, factors
                product_class = TautClass.one(n, flavor)
                for factor in shuffled:
                    product_class = product_class * TautClass.from_factors(n, flavor, [factor])
                assert product_class == reference, factors

    def test_round_trips(self):
        rng = random.Random(2)
        for _ in range(500):
            flavor = rng.choice([RELATIVE, POINTED])
            n = rng.randint(1, 4)
            terms = []
            for _ in range(rng.randint(1, 3)):
                monomial = "*".join(factor_text(f) for f in random_factors(rng, n, flavor, 4))
                terms.append(f"{rng.choice(COEFFICIENTS)}*{monomial}")
            text = " + ".join(terms)
            assert round_trip(text, n, flavor), text

    @pytest.mark.parametrize("flavor", [RELATIVE, POINTED])
    def test_functoriality_on_two_factors(self, flavor):
        rng = random.Random(3)
        swap = Correspondence(2, 2, identity(2, flavor).cls.permute({1: 2, 2: 1, 3: 3, 4: 4}))
        maps = [swap] + [kunneth_projector(vector, flavor) for vector in ((1, 1), (0, 2), (2, 1))]
        for _ in range(5):
            alpha = TautClass.from_factors(2, flavor, random_factors(rng, 2, flavor, 4))
            first, second = rng.choice(maps), rng.choice(maps)
            assert act(compose(second, first), alpha) == act(second, act(first, alpha))

    @pytest.mark.parametrize("flavor", [RELATIVE, POINTED])
    def test_json_validates_against_schema(self, flavor):
        rng = random.Random(4)
        for _ in range(20):
            value = TautClass.from_factors(3, flavor, random_factors(rng, 3, flavor, 4), parse_scalar("(g-1)/3"))
            data = json.loads(json.dumps(class_json(value)))
            model = TautClassModel.model_validate(data)
            assert model.model_dump() == data
            assert set(data) == set(class_schema()["required"])
