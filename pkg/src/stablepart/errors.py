class CapExceeded(ValueError):
    """A brute-force or exact computation was refused because it is over its size cap."""
