"""Deterministic random number generation.

All randomized paths in the library draw from SplitMix64 (Steele, Lea,
Flood 2014): a 64-bit generator whose entire state is one integer, with
identical output on every platform and Python version. Sub-streams for
parallel tasks are derived by mixing the user seed with the task index,
so results do not depend on worker count or scheduling.
"""

MASK64 = (1 << 64) - 1


def mix64(z: int) -> int:
    """The SplitMix64 finalizer: a bijective 64-bit hash."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, *indices: int) -> int:
    """Deterministic sub-seed for task (seed, i, j, ...)."""
    z = mix64(seed)
    for ix in indices:
        z = mix64(z ^ (0x9E3779B97F4A7C15 + (ix & MASK64)))
    return z


class RngState:
    """SplitMix64 stream. Owned by a single caller; not thread-safe."""

    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        return mix64(self.state)

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (n <= 2^64)."""
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % n

    def spawn(self, *indices: int) -> "RngState":
        return RngState(derive_seed(self.state, *indices))
