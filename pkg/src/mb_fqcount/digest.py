"""Content hashes for bijection pairings."""

from cryptography.hazmat.primitives import hashes

Point = tuple[int, ...]


class PairingDigest:
    """Streaming SHA-256 over ``x1,...,xn->y1,...,yn`` lines, one per pair in insertion order."""

    def __init__(self) -> None:
        """Start an empty digest."""
        self._hash = hashes.Hash(hashes.SHA256())

    def update(self, source: Point, image: Point) -> None:
        """Feed one pair."""
        line = f"{','.join(map(str, source))}->{','.join(map(str, image))}\n"
        self._hash.update(line.encode())

    def hexdigest(self) -> str:
        """Finalize and return the hex digest; the object cannot be updated afterwards."""
        return self._hash.finalize().hex()
