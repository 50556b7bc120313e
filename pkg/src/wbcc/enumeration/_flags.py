"""Pruning flags understood by both search kernels.

Every flag is an isomorphism-invariant restriction (the constant 0 is fixed
by every relabeling), so pruning with it never loses a canonical table.
"""

LEXMIN = 1 << 0  # keep only tables that are lex-least among 0-fixing relabelings
BCC = 1 << 1  # 0*x = 0 for all x
NOT_BCC = 1 << 2  # some 0*x != 0
BCI = 1 << 3  # (x*y)*z = (x*z)*y for all x, y, z
SOLID = 1 << 4  # (x*y)*z = (x*z)*y whenever x, y share a branch

ALL = LEXMIN | BCC | NOT_BCC | BCI | SOLID
