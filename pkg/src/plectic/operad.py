"""Partial compositions and symmetric-group actions on vector-valued forms.

The collection P(m), m >= 2, of nondegenerate R^m-valued (k+1)-forms on a
fixed R^n carries partial compositions obtained by splicing component
sequences, together with the position-reindexing action of the symmetric
groups; the composition of two members is checked (not assumed) to remain
nondegenerate.

Permutations are tuples of 1-based images.  The group acts on the right by
position reindexing: component j of ``act(sigma, w)`` is component sigma(j)
of ``w``.  Under this convention the two equivariance laws read

    compose_at(beta, i, act(sigma, alpha))
        == act(embed_promote(sigma, i, p + q - 1), compose_at(beta, i, alpha))

    compose_at(act(sigma, beta), i, alpha)
        == act(block_promote(sigma, sizes), compose_at(beta, sigma[i-1], alpha))

where ``sizes`` has q at position i and 1 elsewhere.
"""

from __future__ import annotations

from .linear import VectorValuedForm, is_nondegenerate


def validate_permutation(sigma) -> tuple[int, ...]:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sigma)}: {sigma}")
    return sigma


def identity_permutation(m: int) -> tuple[int, ...]:
    return tuple(range(1, m + 1))


def compose_permutations(sigma, tau) -> tuple[int, ...]:
    """sigma after tau: the result maps j to sigma(tau(j))."""
    sigma = validate_permutation(sigma)
    tau = validate_permutation(tau)
    if len(sigma) != len(tau):
        raise ValueError("permutation sizes differ")
    return tuple(sigma[t - 1] for t in tau)


def invert_permutation(sigma) -> tuple[int, ...]:
    sigma = validate_permutation(sigma)
    inv = [0] * len(sigma)
    for j, s in enumerate(sigma, start=1):
        inv[s - 1] = j
    return tuple(inv)


def require_member(w: VectorValuedForm, what: str = "form") -> VectorValuedForm:
    """Check membership in the graded collection: arity >= 2 and nondegenerate."""
    if not isinstance(w, VectorValuedForm):
        raise TypeError(f"{what} must be a VectorValuedForm")
    if w.m < 2:
        raise ValueError(f"{what} must have arity >= 2, got {w.m}")
    if not is_nondegenerate(w):
        raise ValueError(f"{what} is degenerate, not an operad element")
    return w


def compose_at(beta: VectorValuedForm, i: int, alpha: VectorValuedForm) -> VectorValuedForm:
    """Splice alpha's components into slot i of beta.

    The result has arity p + q - 1 and is verified to be nondegenerate (the
    joint kernel of the spliced sequence sits inside alpha's, which is
    trivial).
    """
    require_member(beta, "beta")
    require_member(alpha, "alpha")
    if (beta.dim, beta.degree) != (alpha.dim, alpha.degree):
        raise ValueError("compose_at requires matching dimension and degree")
    p = beta.m
    if not 1 <= i <= p:
        raise ValueError(f"slot {i} out of range 1..{p}")
    stacked = (
        beta.components[: i - 1] + alpha.components + beta.components[i:]
    )
    result = VectorValuedForm(stacked)
    if not is_nondegenerate(result):
        raise AssertionError("composition left the nondegenerate locus")
    return result


def act(sigma, w: VectorValuedForm) -> VectorValuedForm:
    """Right action by position reindexing: component j becomes w_{sigma(j)}."""
    sigma = validate_permutation(sigma)
    if len(sigma) != w.m:
        raise ValueError(f"permutation size {len(sigma)} != arity {w.m}")
    return VectorValuedForm(tuple(w.components[s - 1] for s in sigma))


def block_promote(sigma, blocks) -> tuple[int, ...]:
    """Lift a permutation of blocks to a permutation of letters.

    ``blocks[j]`` is the length of the j-th block of the REARRANGED sequence;
    applying ``act`` with the returned permutation to a sequence laid out in
    source block order makes its j-th block equal to the source's sigma(j)-th
    block.  (The source's block b therefore has length
    ``blocks[sigma^{-1}(b)]``.)
    """
    sigma = validate_permutation(sigma)
    blocks = tuple(int(b) for b in blocks)
    if len(blocks) != len(sigma):
        raise ValueError("need one block size per permuted slot")
    if any(b < 1 for b in blocks):
        raise ValueError("block sizes must be positive")
    p = len(sigma)
    src_size = [0] * p
    for j, b in enumerate(sigma):
        src_size[b - 1] = blocks[j]
    src_offset = [0] * p
    for b in range(1, p):
        src_offset[b] = src_offset[b - 1] + src_size[b - 1]
    out = []
    for j, b in enumerate(sigma):
        start = src_offset[b - 1]
        out.extend(range(start + 1, start + blocks[j] + 1))
    return tuple(out)


def embed_promote(sigma, position: int, total: int) -> tuple[int, ...]:
    """Embed a permutation of a window [position, position+q-1] into 1..total."""
    sigma = validate_permutation(sigma)
    q = len(sigma)
    if position < 1 or position + q - 1 > total:
        raise ValueError(
            f"window [{position}, {position + q - 1}] does not fit in 1..{total}"
        )
    out = list(range(1, total + 1))
    for r, s in enumerate(sigma, start=1):
        out[position - 1 + r - 1] = position - 1 + s
    return tuple(out)
