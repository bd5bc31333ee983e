"""
The model module.

Stores the LindbladModel class and the spin chain builders. Pauli matrices
are the standard ones (eigenvalues +-1) and |0> = (1, 0) is the sigma_z = +1
state, so the lowering operator (sigma_x - i sigma_y) / 2 is [[0, 0], [1, 0]]
and maps |0> to |1>.

Chains have `sites` distinct spins with periodic boundary conditions: the
bond i couples spin i to spin (i + 1) mod sites.
"""
import logging

import numpy as np

from ..errors import vqss_errors
from ..linalg.matrix_ops import check_hermitian, kron_all
from ..linalg.states import as_complex_matrix, qubits_for_dimension
from ..circuits.gates import PAULI


IDENTITY = np.eye(2, dtype=complex)
SIGMA_MINUS = (PAULI['x'] - 1j * PAULI['y']) / 2


class LindbladModel:
    """
    Lindblad model instance.

    Holds the Hamiltonian H, the jump operators c_i and their rates gamma_i
    (hbar = 1). The products c_i^dagger and c_i^dagger c_i are precomputed
    once, the model is not mutated afterwards.
    """

    def __init__(self, hamiltonian, jump_ops=(), rates=(), name="custom"):
        """
        Initialize the LindbladModel class.

        Args:
            hamiltonian: Hermitian ComplexMatrix of dimension 2**n.
            jump_ops: sequence of ComplexMatrix of the same dimension.
            rates: sequence of non-negative rates, one per jump operator.
            name: label used in logs and summaries. (default: {"custom"})

        Raises:
            NotHermitianException: the Hamiltonian is not Hermitian.
            InvalidModelException: counts, dimensions or rates are invalid.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())
        hamiltonian = check_hermitian(hamiltonian)
        try:
            self.n_system = qubits_for_dimension(hamiltonian.shape[0])
        except vqss_errors.DimensionMismatchException as dme:
            raise vqss_errors.InvalidModelException(str(dme))
        jump_ops = [as_complex_matrix(op) for op in jump_ops]
        rates = [float(rate) for rate in rates]
        if len(jump_ops) != len(rates):
            raise vqss_errors.InvalidModelException(
                "{} jump operators but {} rates".format(len(jump_ops), len(rates)))
        for op in jump_ops:
            if op.shape != hamiltonian.shape:
                raise vqss_errors.InvalidModelException(
                    "Jump operator of shape {} does not match Hamiltonian {}".format(
                        op.shape, hamiltonian.shape))
        if not all(np.isfinite(rate) and rate >= 0 for rate in rates):
            raise vqss_errors.InvalidModelException(
                "Rates must be finite and non-negative: {}".format(rates))

        self.name = name
        self.hamiltonian = hamiltonian
        self.jump_ops = jump_ops
        self.rates = rates
        dimension = hamiltonian.shape[0]
        if jump_ops:
            self.jump_stack = np.array(jump_ops)
        else:
            self.jump_stack = np.zeros((0, dimension, dimension), dtype=complex)
        self.jump_dagger_stack = self.jump_stack.conj().transpose(0, 2, 1)
        self.decay_stack = self.jump_dagger_stack @ self.jump_stack
        self.rate_column = np.array(rates, dtype=float).reshape(-1, 1, 1)
        for array in (self.hamiltonian, self.jump_stack, self.jump_dagger_stack,
                      self.decay_stack, self.rate_column):
            array.setflags(write=False)

        msg = "Model {} built: n_system={}, {} jump operators".format(
            name, self.n_system, len(jump_ops))
        self.vqss_log.debug(msg)

    @property
    def dimension(self):
        """Return 2**n_system."""
        return self.hamiltonian.shape[0]

    def __repr__(self):
        """Return a short description."""
        return "LindbladModel(name={}, n_system={})".format(self.name, self.n_system)


def embed(op, site, sites):
    """
    Place a single-site operator on one site of a chain.

    Args:
        op: 2x2 matrix.
        site: site index, 0 is the leftmost tensor factor.
        sites: chain length.

    Returns:
        I (x) ... (x) op (x) ... (x) I.

    """
    factors = [IDENTITY] * sites
    factors[site] = op
    return kron_all(factors)


def _bond(op, site, sites):
    """Return op_site op_(site+1 mod sites)."""
    return embed(op, site, sites) @ embed(op, (site + 1) % sites, sites)


def _check_chain(sites):
    if sites < 2:
        raise vqss_errors.InvalidModelException(
            "A periodic chain needs at least 2 sites, got {}".format(sites))


def build_tfim(sites, v, g):
    """
    Transverse field Ising Hamiltonian.

    H = (V/4) sum_i sz_i sz_(i+1) + (g/2) sum_i sx_i with periodic boundary.

    Args:
        sites: number of spins, at least 2.
        v: nearest-neighbour zz coupling V.
        g: transverse field amplitude.

    Returns:
        Hamiltonian ComplexMatrix of dimension 2**sites.

    Raises:
        InvalidModelException: sites < 2.

    """
    _check_chain(sites)
    dimension = 2 ** sites
    hamiltonian = np.zeros((dimension, dimension), dtype=complex)
    for site in range(sites):
        hamiltonian += (v / 4) * _bond(PAULI['z'], site, sites)
        hamiltonian += (g / 2) * embed(PAULI['x'], site, sites)
    return hamiltonian


def build_xyz(sites, jx, jy, jz):
    """
    XYZ Heisenberg Hamiltonian.

    H = sum_i (Jx sx_i sx_(i+1) + Jy sy_i sy_(i+1) + Jz sz_i sz_(i+1)) with
    periodic boundary.

    Args:
        sites: number of spins, at least 2.
        jx: xx coupling.
        jy: yy coupling.
        jz: zz coupling.

    Returns:
        Hamiltonian ComplexMatrix of dimension 2**sites.

    Raises:
        InvalidModelException: sites < 2.

    """
    _check_chain(sites)
    dimension = 2 ** sites
    hamiltonian = np.zeros((dimension, dimension), dtype=complex)
    for site in range(sites):
        for coupling, axis in ((jx, 'x'), (jy, 'y'), (jz, 'z')):
            if coupling:
                hamiltonian += coupling * _bond(PAULI[axis], site, sites)
    return hamiltonian


def build_custom(sites, hx=0.0, hy=0.0, hz=0.0, jx=0.0, jy=0.0, jz=0.0):
    """
    Uniform field plus XYZ couplings.

    H = sum_i (hx sx_i + hy sy_i + hz sz_i), plus the build_xyz couplings
    when sites >= 2.

    Args:
        sites: number of spins, at least 1.
        hx: field along x. (default: {0.0})
        hy: field along y. (default: {0.0})
        hz: field along z. (default: {0.0})
        jx: xx coupling. (default: {0.0})
        jy: yy coupling. (default: {0.0})
        jz: zz coupling. (default: {0.0})

    Returns:
        Hamiltonian ComplexMatrix of dimension 2**sites.

    Raises:
        InvalidModelException: sites < 1, or couplings on a single site.

    """
    if sites < 1:
        raise vqss_errors.InvalidModelException("Need at least 1 site, got {}".format(sites))
    dimension = 2 ** sites
    hamiltonian = np.zeros((dimension, dimension), dtype=complex)
    for site in range(sites):
        for field, axis in ((hx, 'x'), (hy, 'y'), (hz, 'z')):
            if field:
                hamiltonian += field * embed(PAULI[axis], site, sites)
    if jx or jy or jz:
        hamiltonian += build_xyz(sites, jx, jy, jz)
    return hamiltonian


def uniform_lowering_dissipation(sites, gamma):
    """
    One lowering channel per site.

    Args:
        sites: number of spins.
        gamma: common rate, non-negative.

    Returns:
        Tuple (jump_ops, rates) with c_i = sigma^-_i and gamma_i = gamma.

    Raises:
        InvalidModelException: negative or non-finite gamma.

    """
    if not np.isfinite(gamma) or gamma < 0:
        raise vqss_errors.InvalidModelException(
            "gamma must be finite and non-negative, got {}".format(gamma))
    jump_ops = [embed(SIGMA_MINUS, site, sites) for site in range(sites)]
    return jump_ops, [float(gamma)] * sites


def tfim_model(sites, v, g, gamma):
    """Return the dissipative Ising LindbladModel."""
    jump_ops, rates = uniform_lowering_dissipation(sites, gamma)
    return LindbladModel(build_tfim(sites, v, g), jump_ops, rates, name="tfim")


def xyz_model(sites, jx, jy, jz, gamma):
    """Return the dissipative XYZ LindbladModel."""
    jump_ops, rates = uniform_lowering_dissipation(sites, gamma)
    return LindbladModel(build_xyz(sites, jx, jy, jz), jump_ops, rates, name="xyz")


def custom_model(sites, gamma, hx=0.0, hy=0.0, hz=0.0, jx=0.0, jy=0.0, jz=0.0):
    """Return a dissipative uniform-field XYZ LindbladModel."""
    jump_ops, rates = uniform_lowering_dissipation(sites, gamma)
    hamiltonian = build_custom(sites, hx, hy, hz, jx, jy, jz)
    return LindbladModel(hamiltonian, jump_ops, rates, name="custom")


def single_qubit_decay_model(gamma=1.0):
    """Return H = 0 with one lowering channel; its steady state is |1><1|."""
    return custom_model(1, gamma)
