from app.symprod.zero_cycle import (
    BASE_POINT,
    IdentityCheck,
    ZeroCycle,
    cycle_text,
    decompose,
    lewis_level,
    parse_cycle,
    push_o,
    reconstruct,
    s_pull,
    verify_identity,
)

__all__ = [
    "BASE_POINT", "IdentityCheck", "ZeroCycle", "cycle_text", "decompose", "lewis_level",
    "parse_cycle", "push_o", "reconstruct", "s_pull", "verify_identity",
]
