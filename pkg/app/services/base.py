"""
Shared plumbing for the service classes: error capture, genus handling and
class rendering.
"""
from fractions import Fraction
from functools import wraps
from typing import Callable, Dict, Optional
import json
import logging

from app.core.exceptions import TautCalcError, UsageError
from app.exactnum.parser import parse_scalar
from app.schemas.taut import class_json
from app.tautring.printing import class_latex, class_text
from app.tautring.taut_class import TautClass

logger = logging.getLogger(__name__)

GENERIC = "generic"


def service_result(method: Callable[..., Dict]) -> Callable[..., Dict]:
    """
    Run a service method and turn raised errors into status dictionaries
    """
    @wraps(method)
    def wrapper(*args, **kwargs) -> Dict:
        try:
            return method(*args, **kwargs)
        except TautCalcError as e:
            logger.info(f"{method.__qualname__} refused: {e}")
            return e.to_dict()
        except Exception as e:
            logger.exception(f"{method.__qualname__} failed unexpectedly")
            return {
                'status': 'error',
                'kind': 'internal',
                'message': f'Internal error: {str(e)}',
                'exit_code': 3
            }
    return wrapper


def parse_genus(genus: Optional[str]) -> Optional[Fraction]:
    """None for the symbolic genus, otherwise the numeric value"""
    if genus is None or str(genus).strip().lower() == GENERIC:
        return None
    value = parse_scalar(str(genus))
    if not value.is_constant():
        raise UsageError(f"genus must be 'generic', an integer or a fraction, got {genus!r}")
    return value.eval(0)


def specialize(cls: TautClass, genus: Optional[str]) -> TautClass:
    g0 = parse_genus(genus)
    return cls if g0 is None else cls.specialize(g0)


def class_payload(cls: TautClass, genus: Optional[str] = None, **extra) -> Dict:
    cls = specialize(cls, genus)
    result = {
        'status': 'success',
        'data': class_json(cls),
        'text': class_text(cls),
        'latex': class_latex(cls)
    }
    result.update(extra)
    return result


def frame_latex(frame) -> str:
    header = " & ".join(str(column).replace("_", "\\_") for column in frame.columns)
    rows = [" & ".join(str(value) for value in row) for row in frame.itertuples(index=False)]
    body = " \\\\\n".join([header] + rows)
    return f"\\begin{{tabular}}{{{'l' * len(frame.columns)}}}\n{body}\n\\end{{tabular}}"


def table_payload(frame, data=None, **extra) -> Dict:
    """Payload for a tabular report kept as a pandas DataFrame"""
    text = "(empty)" if frame.empty else frame.to_string(index=False)
    result = {
        'status': 'success',
        'data': json.loads(frame.to_json(orient="records")) if data is None else data,
        'text': text,
        'latex': frame_latex(frame)
    }
    result.update(extra)
    return result
