from typing import Dict, Optional, Tuple
import json
import logging
import re

import pandas as pd

from app.brauer.diagram import parse_diagram
from app.brauer.realization import realize
from app.core.config import settings
from app.core.exceptions import UsageError
from app.schemas.taut import class_schema
from app.services.base import class_payload, parse_genus, service_result, table_payload
from app.tautring.correspondence import Correspondence, act, compose
from app.tautring.cycles import (
    compare_printed_fp1,
    diagonal_power_relation,
    fp,
    fpnm,
    gross_schoen_y,
    gs,
    gs_y_difference,
    zk,
)
from app.tautring.expression import parse_expr
from app.tautring.lewis import lewis_level_estimate
from app.tautring.monomial import Flavor
from app.tautring.printing import class_text, monomial_text
from app.tautring.projectors import kunneth_projector, projector_for
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)

NAMED_CYCLE = re.compile(
    r"^(?P<name>gs|zk|y|fp(?P<fp>\d+)|fpnm(?P<n>\d+),(?P<m>\d+))(?:\^(?P<power>\d+))?$"
)


def resolve_named_cycle(text: str) -> Tuple[TautClass, int]:
    """
    `gs`, `zk`, `y`, `fpN`, `fpnmN,M`, each with an optional `^k`; returns the
    class and the number of tensor copies
    """
    match = NAMED_CYCLE.match(text.replace(" ", ""))
    if match is None:
        raise UsageError(
            f"unknown named cycle {text!r} (expected gs, zk, y, fpN or fpnmN,M with optional ^k)"
        )
    name = match.group("name")
    if name == "gs":
        base = gs()
    elif name == "zk":
        base = zk()
    elif name == "y":
        base = gross_schoen_y()
    elif match.group("fp") is not None:
        base = fp(int(match.group("fp")))
    else:
        base = fpnm(int(match.group("n")), int(match.group("m")))
    copies = int(match.group("power") or 1)
    if copies < 1:
        raise UsageError(f"tensor power must be positive in {text!r}")
    return base, copies


def parse_correspondence(spec: str, flavor: Flavor = Flavor.RELATIVE, source: Optional[int] = None,
                         target: Optional[int] = None) -> Correspondence:
    """
    `kunneth:1,1`, `projector:1`, `brauer:[(1,1'),...]` or a class expression on
    source + target factors
    """
    flavor = Flavor(flavor)
    head, _, rest = spec.partition(":")
    head = head.strip().lower()
    if head == "kunneth" and rest:
        try:
            vector = [int(part) for part in rest.split(",")]
        except ValueError:
            raise UsageError(f"kunneth vector must be comma-separated 0/1/2, got {rest!r}")
        return kunneth_projector(vector, flavor)
    if head == "projector" and rest:
        try:
            degree = int(rest)
        except ValueError:
            raise UsageError(f"projector degree must be 0, 1 or 2, got {rest!r}")
        return projector_for(degree, flavor)
    if head == "brauer" and rest:
        return realize(parse_diagram(rest, source, target), flavor)
    if source is None or target is None:
        raise UsageError("an expression correspondence needs --source and --target")
    return Correspondence(source, target, parse_expr(spec, source + target, flavor))


class TautService:

    @staticmethod
    @service_result
    def simplify(expression: str, n: int, flavor: str = None, genus: Optional[str] = None) -> Dict:
        """
        Parse and normalize a class expression
        """
        flavor = flavor or settings.DEFAULT_FLAVOR
        return class_payload(parse_expr(expression, n, flavor), genus)

    @staticmethod
    @service_result
    def act(correspondence: str, expression: str, flavor: str = None, source: Optional[int] = None,
            target: Optional[int] = None, genus: Optional[str] = None) -> Dict:
        flavor = flavor or settings.DEFAULT_FLAVOR
        gamma = parse_correspondence(correspondence, flavor, source, target)
        alpha = parse_expr(expression, gamma.source, flavor)
        return class_payload(act(gamma, alpha), genus)

    @staticmethod
    @service_result
    def compose(second: str, first: str, flavor: str = None, source: Optional[int] = None,
                target: Optional[int] = None, genus: Optional[str] = None) -> Dict:
        """
        second o first; expression correspondences share --source/--target
        """
        flavor = flavor or settings.DEFAULT_FLAVOR
        result = compose(
            parse_correspondence(second, flavor, source, target),
            parse_correspondence(first, flavor, source, target)
        )
        return class_payload(result.cls, genus, source=result.source, target=result.target)

    @staticmethod
    @service_result
    def named(name: str, genus: Optional[str] = None) -> Dict:
        base, copies = resolve_named_cycle(name)
        cls = base
        for _ in range(copies - 1):
            cls = cls.outer(base)
        return class_payload(cls, genus)

    @staticmethod
    @service_result
    def fp(n: int, genus: Optional[str] = None) -> Dict:
        return class_payload(fp(n), genus, symmetric=fp(n).is_symmetric())

    @staticmethod
    @service_result
    def fpnm(n: int, m: int, genus: Optional[str] = None) -> Dict:
        return class_payload(fpnm(n, m), genus)

    @staticmethod
    @service_result
    def restrict(expression: str, n: int, genus: Optional[str] = None) -> Dict:
        return class_payload(parse_expr(expression, n, Flavor.RELATIVE).restrict(), genus)

    @staticmethod
    @service_result
    def degree(expression: str, n: int, flavor: str = None, genus: Optional[str] = None) -> Dict:
        """
        Degree of a top-codimension pointed class; relative input is restricted first
        """
        flavor = Flavor(flavor or settings.DEFAULT_FLAVOR)
        cls = parse_expr(expression, n, flavor)
        if flavor is Flavor.RELATIVE:
            cls = cls.restrict()
        value = cls.degree(n)
        g0 = parse_genus(genus)
        if g0 is not None:
            value = value.specialize(g0)
        num, den = value.poly_strings()
        return {
            'status': 'success',
            'data': {'num': num, 'den': den},
            'text': str(value),
            'latex': value.to_latex()
        }

    @staticmethod
    @service_result
    def lewis_estimate(expression: str, n: int, flavor: str = None) -> Dict:
        flavor = flavor or settings.DEFAULT_FLAVOR
        cls = TautService._class_or_named(expression, n, flavor)
        report = lewis_level_estimate(cls)
        frame = pd.DataFrame(
            [
                {
                    'vector': ",".join(str(a) for a in c.vector),
                    'codimension': c.codimension,
                    'base_degree': c.base_degree,
                    'fiber_degree': c.fiber_degree,
                    'image': class_text(c.image)
                }
                for c in report.components
            ],
            columns=['vector', 'codimension', 'base_degree', 'fiber_degree', 'image']
        )
        data = {
            'n': report.n,
            'components': json.loads(frame.to_json(orient="records")),
            'histogram': [
                {'base_degree': base, 'fiber_degree': fiber, 'count': count}
                for (base, fiber), count in report.histogram.items()
            ],
            'level': report.level
        }
        result = table_payload(frame, data=data)
        result['text'] += f"\nlevel: {report.level if report.level is not None else 'none (zero class)'}"
        return result

    @staticmethod
    def _class_or_named(expression: str, n: Optional[int], flavor: str) -> TautClass:
        if NAMED_CYCLE.match(expression.replace(" ", "")):
            base, copies = resolve_named_cycle(expression)
            cls = base
            for _ in range(copies - 1):
                cls = cls.outer(base)
            return cls
        if n is None:
            raise UsageError("an expression needs --n")
        return parse_expr(expression, n, flavor)

    @staticmethod
    @service_result
    def witness(name: str) -> Dict:
        """
        printed-fp1: fp(1) against its printed expansion; diagonal-power: D^4 psi^2 against
        D^3 psi^3; gs-minus-y: restricted gs() minus the pointed Y cycle
        """
        if name == "printed-fp1":
            rows = compare_printed_fp1()
            frame = pd.DataFrame(
                [
                    {
                        'monomial': monomial_text(row['monomial']),
                        'engine': str(row['engine']),
                        'printed': str(row['printed']),
                        'status': row['status']
                    }
                    for row in rows
                ],
                columns=['monomial', 'engine', 'printed', 'status']
            )
            return table_payload(frame, symmetric=fp(1).is_symmetric())
        if name == "diagonal-power":
            frame = pd.DataFrame(
                [
                    {
                        'flavor': relation['flavor'].value,
                        'first': class_text(relation['first']),
                        'second': class_text(relation['second']),
                        'relation': relation['relation']
                    }
                    for relation in (diagonal_power_relation(f) for f in Flavor)
                ],
                columns=['flavor', 'first', 'second', 'relation']
            )
            return table_payload(frame)
        if name == "gs-minus-y":
            report = gs_y_difference()
            frame = pd.DataFrame(
                [
                    {'monomial': monomial_text(row['monomial']), 'coeff': str(row['coeff']), 'shape': row['shape']}
                    for row in report['terms']
                ],
                columns=['monomial', 'coeff', 'shape']
            )
            result = table_payload(frame, difference=class_text(report['difference']),
                                   fp1_type=report['fp1_type'])
            result['text'] = f"difference: {class_text(report['difference'])}\n{result['text']}"
            return result
        raise UsageError(f"unknown witness {name!r} (expected printed-fp1, diagonal-power or gs-minus-y)")

    @staticmethod
    @service_result
    def schema() -> Dict:
        schema = class_schema()
        text = json.dumps(schema, indent=2, sort_keys=True)
        return {'status': 'success', 'data': schema, 'text': text, 'latex': text}
