from typing import Dict

from fastapi import HTTPException

STATUS_BY_KIND = {
    'refusal': 422,
    'invariant': 500,
    'internal': 500,
}


def unwrap(result: Dict) -> Dict:
    """Raise an HTTPException for a failed service result, else pass it through"""
    if result.get('status') != 'success':
        raise HTTPException(
            status_code=STATUS_BY_KIND.get(result.get('kind'), 400),
            detail={'kind': result.get('kind'), 'message': result.get('message')}
        )
    return result
