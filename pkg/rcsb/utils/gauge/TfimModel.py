##
# File:    TfimModel.py
# Date:    16-Oct-2026
# Version: 0.001 Initial version
#
# Updates:
#
##
"""
Periodic transverse-field Ising chain in a longitudinal field, its nearest-neighbor patch cover,
patch-local Hamiltonian terms and quench initial states.

    H = -J sum_<ij> Z_i Z_j - hx sum_i X_i - hz sum_i Z_i

Each patch <i, i+1 mod L> carries

    H_<ij> = -J Z_i Z_j - (hx / 2) (X_i + X_j) - (hz / 2) (Z_i + Z_j)

so that the patch terms sum exactly to H on the ring.

"""
__docformat__ = "google en"
__author__ = "Gauge Picture Contributors"
__license__ = "Apache 2.0"

import logging
from collections import namedtuple

import numpy as np

from rcsb.utils.gauge.ComplexLinAlgUtils import ComplexLinAlgUtils
from rcsb.utils.gauge.GaugeExceptions import RejectedInputError, ResourceLimitError

logger = logging.getLogger(__name__)

Patch = namedtuple("Patch", ("patchId", "sites"))
# overlaps[I] lists every J (including I) sharing a site with I; pairs are the reported S_IJ pairs
PatchCover = namedtuple("PatchCover", ("L", "patches", "overlaps", "pairs"))
LocalTerm = namedtuple("LocalTerm", ("patch", "matrix"))
ModelSpecFields = ("L", "J", "hx", "hz", "boundary")
ModelSpec = namedtuple("ModelSpec", ModelSpecFields, defaults=(1.0, 1.0, 0.0, "periodic"))

PAULI = {
    "i": np.eye(2, dtype=complex),
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}


class TfimModel(object):
    """Builders for the ring model used by the gauge picture engine."""

    def __init__(self, **kwargs):
        """
        Args:
            maxLength (int, optional): hard cap on L for dense full-space operators. Defaults to 12.
        """
        self.__maxLength = kwargs.get("maxLength", 12)
        self.__laU = ComplexLinAlgUtils()

    def pauli(self, name):
        try:
            return PAULI[name.lower()].copy()
        except (KeyError, AttributeError):
            raise RejectedInputError("unknown Pauli operator %r" % (name,))

    def checkModelSpec(self, spec):
        if spec.boundary != "periodic":
            raise RejectedInputError("only periodic boundary conditions are supported (got %r)" % spec.boundary)
        if int(spec.L) < 3:
            raise RejectedInputError("chain length must be at least 3 (got %r)" % spec.L)
        return True

    def buildCover(self, L, patchSites):
        """Return a PatchCover for arbitrary patches (list of site lists) on L sites.

        The reported pairs are all unordered overlapping pairs (I < J).
        """
        patches = []
        for ii, sites in enumerate(patchSites):
            sL = [int(s) for s in sites]
            if not sL or len(set(sL)) != len(sL) or any(s < 0 or s >= L for s in sL):
                raise RejectedInputError("invalid patch sites %r for L=%d" % (sites, L))
            patches.append(Patch(ii, tuple(sL)))
        covered = set()
        for p in patches:
            covered.update(p.sites)
        if covered != set(range(L)):
            raise RejectedInputError("patches leave sites %r uncovered" % sorted(set(range(L)) - covered))
        overlaps = []
        for p in patches:
            overlaps.append(tuple(q.patchId for q in patches if set(p.sites) & set(q.sites)))
        pairs = tuple((i, j) for i in range(len(patches)) for j in overlaps[i] if j > i)
        return PatchCover(L, tuple(patches), tuple(overlaps), pairs)

    def buildChainCover(self, L):
        """Return the periodic nearest-neighbor cover: patch I = <I, I+1 mod L>.

        The reported pairs are the neighboring patches (I, I+1 mod L).
        """
        if int(L) < 3:
            raise RejectedInputError("chain cover requires L >= 3 (got %r)" % L)
        cover = self.buildCover(L, [(i, (i + 1) % L) for i in range(L)])
        pairs = tuple((i, (i + 1) % L) for i in range(L))
        return cover._replace(pairs=pairs)

    def tfimLocalTerm(self, patch, spec):
        """Return the LocalTerm for a two-site patch <i, j>."""
        if len(patch.sites) != 2:
            raise RejectedInputError("TFIM local terms need two-site patches (got %r)" % (patch.sites,))
        x = PAULI["x"]
        z = PAULI["z"]
        eye = PAULI["i"]
        # kron(a, b): b acts on sites[0] (least significant bit)
        mat = -spec.J * np.kron(z, z) - 0.5 * spec.hx * (np.kron(eye, x) + np.kron(x, eye)) - 0.5 * spec.hz * (np.kron(eye, z) + np.kron(z, eye))
        return LocalTerm(patch, mat.astype(complex))

    def buildLocalTerms(self, spec, cover):
        return [self.tfimLocalTerm(patch, spec) for patch in cover.patches]

    def assembleFullHamiltonian(self, spec):
        """Return the dense 2^L Hamiltonian of the ring.

        Raises:
            ResourceLimitError: L exceeds the configured cap
        """
        self.checkModelSpec(spec)
        L = int(spec.L)
        if L > self.__maxLength:
            raise ResourceLimitError("L=%d exceeds the dense Hamiltonian cap %d" % (L, self.__maxLength))
        N = 2**L
        # diagonal part from bit patterns, transverse field by bit flips
        idx = np.arange(N)
        spins = 1 - 2 * ((idx[:, None] >> np.arange(L)[None, :]) & 1)
        zz = sum(spins[:, i] * spins[:, (i + 1) % L] for i in range(L))
        diag = -spec.J * zz - spec.hz * spins.sum(axis=1)
        h = np.diag(diag.astype(complex))
        for i in range(L):
            h[idx ^ (1 << i), idx] += -spec.hx
        return h

    def plusXState(self, L):
        if int(L) < 1:
            raise RejectedInputError("L must be positive")
        N = 2 ** int(L)
        return np.full(N, 1.0 / np.sqrt(N), dtype=complex)

    def basisState(self, L, index=0):
        N = 2 ** int(L)
        if not 0 <= int(index) < N:
            raise RejectedInputError("basis index %r out of range for L=%r" % (index, L))
        psi = np.zeros(N, dtype=complex)
        psi[int(index)] = 1.0
        return psi

    def initialState(self, L, name="plus_x"):
        if name == "plus_x":
            return self.plusXState(L)
        if name == "z_up":
            return self.basisState(L, 0)
        raise RejectedInputError("unknown initial state %r" % name)

    def siteOperator(self, name, site, L):
        """Return the dense single-site Pauli operator on site (used for full-space checks)."""
        return self.__laU.embedLocal(self.pauli(name), [site], L)
