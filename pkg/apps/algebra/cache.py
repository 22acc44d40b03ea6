import hashlib
from typing import List, Optional, Sequence

from django.conf import settings
from django.core.cache import cache

from .ring import Polynomial, RingContext, format_polynomial


def compute_hash(ideal_text: str, variant: str = "") -> str:
    """Compute a unique hash for a canonical ideal text."""
    data = f"{ideal_text}|{variant}"
    return hashlib.sha256(data.encode()).hexdigest()


def get_cached_basis(request_hash: str) -> Optional[List[str]]:
    """Retrieve the cached generator texts if available."""
    return cache.get(f"stablegb:gb:{request_hash}")


def cache_basis(request_hash: str, ring: RingContext, generators: Sequence[Polynomial], timeout: int = None):
    """Cache a reduced basis as polynomial texts over `ring`."""
    if timeout is None:
        timeout = settings.STABLEGB_CACHE_TIMEOUT
    data = [format_polynomial(g, ring) for g in generators]
    cache.set(f"stablegb:gb:{request_hash}", data, timeout)
