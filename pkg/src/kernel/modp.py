"""Dense exact linear algebra over GF(p) on int64 tensors.

Entries are kept in [0, p) with p < 2**31, so a single product of two entries fits
in int64. Sums of products do not: `matmul_mod` splits the inner dimension so that
every partial sum stays below 2**63 before it is reduced.
"""
import torch

DTYPE = torch.int64
INT64_MAX = 2**63 - 1


def mod_p(matrix: torch.Tensor, p: int) -> torch.Tensor:
    return torch.remainder(matrix.to(DTYPE), p)


def exact_terms(p: int) -> int:
    """How many products of residues mod p can be summed without leaving int64."""
    return max(1, INT64_MAX // max(1, (p - 1) ** 2))


def matmul_mod(A: torch.Tensor, B: torch.Tensor, p: int) -> torch.Tensor:
    """A @ B over GF(p); batch dimensions broadcast as in torch.matmul."""
    A, B = mod_p(A, p), mod_p(B, p)
    inner = A.shape[-1]
    step = exact_terms(p)
    if inner <= step:
        return torch.remainder(torch.matmul(A, B), p)
    out = torch.remainder(torch.matmul(A[..., :step], B[..., :step, :]), p)
    for start in range(step, inner, step):
        part = torch.matmul(A[..., start : start + step], B[..., start : start + step, :])
        out = torch.remainder(out + torch.remainder(part, p), p)
    return out


def inv_mod_scalar(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def empty(cols: int) -> torch.Tensor:
    return torch.zeros((0, cols), dtype=DTYPE)


def rref_mod(matrix: torch.Tensor, p: int) -> tuple[torch.Tensor, list[int]]:
    """Reduced row echelon form over GF(p). Returns (nonzero rows, pivot columns)."""
    A = mod_p(matrix, p).clone()
    rows, cols = A.shape
    pivot_cols: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = torch.nonzero(A[r:, c]).flatten()
        if candidates.numel() == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = (A[r] * inv_mod_scalar(int(A[r, c]), p)) % p
        factors = A[:, c].clone()
        factors[r] = 0
        hit = torch.nonzero(factors).flatten()
        if hit.numel():
            A[hit] = (A[hit] - factors[hit, None] * A[r]) % p
        pivot_cols.append(c)
        r += 1
    return A[:r], pivot_cols


def rank_mod(matrix: torch.Tensor, p: int) -> int:
    """Rank over GF(p) by forward elimination only."""
    if matrix.numel() == 0:
        return 0
    A = mod_p(matrix, p).clone()
    # eliminate along the shorter side
    if A.shape[0] > A.shape[1]:
        A = A.T.contiguous()
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        candidates = torch.nonzero(A[r:, c]).flatten()
        if candidates.numel() == 0:
            continue
        pivot = r + int(candidates[0])
        if pivot != r:
            A[[r, pivot]] = A[[pivot, r]]
        A[r] = (A[r] * inv_mod_scalar(int(A[r, c]), p)) % p
        below = A[r + 1 :, c]
        hit = torch.nonzero(below).flatten()
        if hit.numel():
            idx = hit + r + 1
            A[idx] = (A[idx] - below[hit, None] * A[r]) % p
        r += 1
    return r


def row_basis(matrix: torch.Tensor, p: int) -> torch.Tensor:
    """Rows of the reduced echelon form: a canonical basis of the row space."""
    if matrix.shape[0] == 0:
        return empty(matrix.shape[1])
    basis, _ = rref_mod(matrix, p)
    return basis


def nullspace_mod(matrix: torch.Tensor, p: int) -> torch.Tensor:
    """Right nullspace of `matrix` over GF(p), returned as rows."""
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return torch.eye(cols, dtype=DTYPE)
    R, pivot_cols = rref_mod(matrix, p)
    pivots = set(pivot_cols)
    free = [j for j in range(cols) if j not in pivots]
    if not free:
        return empty(cols)
    basis = torch.zeros((len(free), cols), dtype=DTYPE)
    free_idx = torch.tensor(free, dtype=torch.long)
    basis[torch.arange(len(free)), free_idx] = 1
    if pivot_cols:
        piv_idx = torch.tensor(pivot_cols, dtype=torch.long)
        # x_pivot = -R[:, free] x_free
        basis[:, piv_idx] = torch.remainder(-R[:, free_idx].T, p)
    return basis
