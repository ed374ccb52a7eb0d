"""End corrections: the b_k system and the b <-> c transforms.

Import from the submodules directly: ``solver`` holds the pure
triangular solves and ``cache`` the memoized ``correction_set``, which
depends on the models package.
"""
