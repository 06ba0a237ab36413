##
# File:    ComplexLinAlgUtils.py
# Date:    16-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#  21-Oct-2026  add partialPairTrace() to avoid forming connection products
#  30-Oct-2026  enforce the polarUnitarize() input residual bound
#
##
"""
Dense complex linear algebra for operators on chains of qubits (Hilbert dimension N = 2^L).

Bit convention (used by every routine in this package): site 0 is the least significant bit of a
basis-state index.  A k-site operator passed with an ordered site list indexes its own 2^k basis
the same way, with sites[0] as its least significant bit.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging

import numpy as np

from rcsb.utils.gauge.GaugeExceptions import IntegrationInstabilityError, RejectedInputError

logger = logging.getLogger(__name__)


class ComplexLinAlgUtils(object):
    """Pure functions on complex128 numpy arrays.  Inputs are never modified."""

    def __init__(self, **kwargs):
        """
        Args:
            expmTol (float, optional): truncation tolerance for the Taylor series in expmAntiHermitian(). Defaults to 1.0e-13.
            polarTol (float, optional): target Frobenius unitarity residual for polarUnitarize(). Defaults to 1.0e-13.
            polarMaxIter (int, optional): maximum Newton-Schulz iterations. Defaults to 25.
            hermitianTol (float, optional): relative tolerance used to validate (anti-)Hermitian inputs. Defaults to 1.0e-10.
        """
        self.__expmTol = kwargs.get("expmTol", 1.0e-13)
        self.__polarTol = kwargs.get("polarTol", 1.0e-13)
        self.__polarMaxIter = kwargs.get("polarMaxIter", 25)
        self.__hermitianTol = kwargs.get("hermitianTol", 1.0e-10)
        self.__maxTaylorTerms = 40

    #
    # --- basic products and reductions ---
    #
    def matmul(self, a, b):
        """Return the product a @ b (b may be a matrix or a vector).

        Raises:
            RejectedInputError: inner dimensions differ
        """
        a = np.asarray(a)
        b = np.asarray(b)
        if a.ndim != 2 or b.ndim not in (1, 2) or a.shape[1] != b.shape[0]:
            raise RejectedInputError("matmul dimension mismatch %r x %r" % (a.shape, b.shape))
        return np.matmul(a, b)

    def adjoint(self, a):
        a = np.asarray(a)
        if a.ndim != 2:
            raise RejectedInputError("adjoint requires a matrix, got shape %r" % (a.shape,))
        return np.ascontiguousarray(a.conj().T)

    def trace(self, a):
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise RejectedInputError("trace requires a square matrix, got shape %r" % (a.shape,))
        return complex(np.trace(a))

    def pairTrace(self, a, b):
        """Return Tr(a b^dagger) in O(N^2) without forming the product."""
        a = np.asarray(a)
        b = np.asarray(b)
        if a.shape != b.shape or a.ndim != 2:
            raise RejectedInputError("pairTrace shape mismatch %r vs %r" % (a.shape, b.shape))
        return complex(np.vdot(b, a))

    def hermitianResidual(self, a):
        a = np.asarray(a)
        return float(np.linalg.norm(a - a.conj().T))

    def unitarityResidual(self, u):
        u = np.asarray(u)
        return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0])))

    #
    # --- site-structured operations ---
    #
    def __checkSites(self, sites, L):
        sL = [int(s) for s in sites]
        if len(set(sL)) != len(sL):
            raise RejectedInputError("repeated site index in %r" % (sL,))
        if any(s < 0 or s >= L for s in sL):
            raise RejectedInputError("site index out of range for L=%d in %r" % (L, sL))
        return sL

    def __siteAxes(self, sites, L):
        # reshape((2,) * L) puts the most significant bit (site L-1) on axis 0
        return [L - 1 - s for s in sites]

    def applyLocal(self, op, sites, L, target):
        """Apply a k-site operator to the row index of a vector or N x M matrix.

        Args:
            op (ndarray): 2^k x 2^k operator on the ordered sites
            sites (list): distinct site indices (sites[0] is the least significant bit of op)
            L (int): chain length
            target (ndarray): vector of length 2^L or a 2^L x M matrix

        Returns:
            ndarray: embedLocal(op, sites, L) @ target, computed by tensor contraction
        """
        sL = self.__checkSites(sites, L)
        k = len(sL)
        op = np.asarray(op)
        target = np.asarray(target)
        if op.shape != (2**k, 2**k):
            raise RejectedInputError("local operator shape %r does not match %d sites" % (op.shape, k))
        if target.ndim not in (1, 2) or target.shape[0] != 2**L:
            raise RejectedInputError("target shape %r does not match L=%d" % (target.shape, L))
        if k == 0:
            return op[0, 0] * target
        tail = tuple(target.shape[1:])
        tT = target.reshape((2,) * L + tail)
        opT = op.reshape((2,) * (2 * k))
        # op axis j (input or output) addresses site sL[k - 1 - j]
        axes = self.__siteAxes([sL[k - 1 - j] for j in range(k)], L)
        res = np.tensordot(opT, tT, axes=(list(range(k, 2 * k)), axes))
        res = np.moveaxis(res, list(range(k)), axes)
        return np.ascontiguousarray(res).reshape(target.shape)

    def embedLocal(self, op, sites, L):
        """Return the 2^L x 2^L operator acting as op on the listed sites and identity elsewhere."""
        return self.applyLocal(op, sites, L, np.eye(2**L, dtype=complex))

    def __splitAxes(self, tracedSites, L):
        tL = self.__checkSites(tracedSites, L)
        tS = set(tL)
        kept = [s for s in range(L) if s not in tS]
        # ascending axis order keeps the lowest remaining site as the least significant bit
        keptAxes = sorted(self.__siteAxes(kept, L))
        tracedAxes = sorted(self.__siteAxes(tL, L))
        return keptAxes, tracedAxes

    def partialTrace(self, a, tracedSites, L):
        """Trace out the listed sites of a 2^L x 2^L operator.

        The result acts on the remaining sites in increasing order (lowest remaining site is the
        least significant bit), so embedLocal(result, remainingSites, L) restores the full space.
        """
        a = np.asarray(a)
        N = 2**L
        if a.shape != (N, N):
            raise RejectedInputError("partialTrace expects a %d x %d operator, got %r" % (N, N, a.shape))
        keptAxes, tracedAxes = self.__splitAxes(tracedSites, L)
        dk = 2 ** len(keptAxes)
        dt = 2 ** len(tracedAxes)
        perm = keptAxes + tracedAxes + [L + x for x in keptAxes] + [L + x for x in tracedAxes]
        r = a.reshape((2,) * (2 * L)).transpose(perm).reshape(dk, dt, dk, dt)
        return np.trace(r, axis1=1, axis2=3)

    def partialPairTrace(self, a, b, tracedSites, L):
        """Return partialTrace(a @ b^dagger, tracedSites, L) without forming the product."""
        a = np.asarray(a)
        b = np.asarray(b)
        N = 2**L
        if a.shape != (N, N) or b.shape != (N, N):
            raise RejectedInputError("partialPairTrace expects two %d x %d operators" % (N, N))
        keptAxes, tracedAxes = self.__splitAxes(tracedSites, L)
        dk = 2 ** len(keptAxes)
        perm = keptAxes + tracedAxes + [L]
        aK = a.reshape((2,) * L + (N,)).transpose(perm).reshape(dk, -1)
        bK = b.reshape((2,) * L + (N,)).transpose(perm).reshape(dk, -1)
        return aK @ bK.conj().T

    #
    # --- exponentials and unitary projection ---
    #
    def expmAntiHermitian(self, g, tol=None):
        """Return exp(g) for anti-Hermitian g by scaling and squaring a truncated Taylor series.

        Args:
            g (ndarray): square matrix with g^dagger = -g (typically -i H delta)
            tol (float, optional): series truncation tolerance. Defaults to the instance expmTol.

        Raises:
            RejectedInputError: g is not square or not anti-Hermitian
        """
        g = np.asarray(g, dtype=complex)
        if g.ndim != 2 or g.shape[0] != g.shape[1]:
            raise RejectedInputError("expmAntiHermitian requires a square matrix, got %r" % (g.shape,))
        tol = tol if tol else self.__expmTol
        gNorm = float(np.linalg.norm(g))
        if np.linalg.norm(g + g.conj().T) > self.__hermitianTol * max(1.0, gNorm):
            raise RejectedInputError("expmAntiHermitian input is not anti-Hermitian")
        n = g.shape[0]
        # 1-norm bounds the spectral norm for normal matrices
        nrm1 = float(np.linalg.norm(g, 1))
        numSquare = 0 if nrm1 <= 0.5 else int(np.ceil(np.log2(nrm1 / 0.5)))
        x = g / 2.0**numSquare
        termTol = tol / 2.0**numSquare
        result = np.eye(n, dtype=complex)
        term = np.eye(n, dtype=complex)
        for k in range(1, self.__maxTaylorTerms + 1):
            term = (term @ x) / k
            result = result + term
            if np.linalg.norm(term, 1) <= termTol:
                break
        for _ in range(numSquare):
            result = result @ result
        logger.debug("expm n %d squarings %d", n, numSquare)
        return result

    def polarUnitarize(self, u):
        """Return the unitary polar factor of a near-unitary matrix by Newton-Schulz iteration.

        The iteration is u <- u (3 I - u^dagger u) / 2 and converges only for ||u^dagger u - I||_F < 1.
        A matrix already unitary to the target residual is returned unchanged (as a copy).

        The stopping target is max(polarTol, N^1.5 eps) on the Frobenius residual.  Above N = 256
        this floor exceeds 1e-12 (7.3e-12 at N = 1024), so the 1e-12 output bound holds for
        N <= 256 only.

        Raises:
            IntegrationInstabilityError: input residual is not below 1, or the iteration diverges
                or fails to converge
        """
        u = np.asarray(u, dtype=complex)
        n = u.shape[0]
        eye = np.eye(n, dtype=complex)
        # double precision floor for the Frobenius residual grows like n^(3/2) eps
        target = max(self.__polarTol, n**1.5 * np.finfo(float).eps)
        r = self.unitarityResidual(u)
        if r <= target:
            return u.copy()
        if not np.isfinite(r):
            raise IntegrationInstabilityError("non-finite frame entries")
        if r >= 1.0:
            raise IntegrationInstabilityError("unitarity residual %.3e is outside the Newton-Schulz convergence region" % r)
        x = u
        for it in range(self.__polarMaxIter):
            x = 0.5 * (x @ (3.0 * eye - x.conj().T @ x))
            rNew = self.unitarityResidual(x)
            if rNew <= target:
                logger.debug("Newton-Schulz converged in %d iterations residual %.3e", it + 1, rNew)
                return x
            if not np.isfinite(rNew) or (rNew >= r and rNew > 1.0e-10):
                raise IntegrationInstabilityError("Newton-Schulz iteration diverged (residual %.3e -> %.3e)" % (r, rNew))
            if rNew >= r:
                # stalled at the rounding floor
                return x
            r = rNew
        raise IntegrationInstabilityError("Newton-Schulz iteration did not converge (residual %.3e)" % r)
