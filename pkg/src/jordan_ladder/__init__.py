"""Exact Jordan chains for the 2D complex anharmonic oscillator family.

The ladder operators A+-, B+- generate a noncommutative algebra whose only
model dependence is [B-, B+] = -2F''(zbar).  Chains of generalized
eigenvectors of H are built in the vacuum representation and checked against
an independent differential-operator oracle.
"""
from .algebra import (AM, AP, BM, BP, NAMED_MODELS, AlgebraElement, Generator, ModelSpec,
                      commutator, commutator_table, cubic_quartic_model, custom_model, energy,
                      hamiltonian_element, harmonic_model, model_by_name, multiply, normal_order,
                      quartic_model, sextic_model, zbar_element)
from .chain import (ChainError, InconsistentChainSystem, JordanChain,
                    UnderdeterminedAfterConstraints, build_ansatz, c_squared, eigenstate,
                    gram_matrix, harmonic_closed_form, jordan_matrix, solve_chain)
from .field import ParamPoly, ParamRatio, PoleError, parse
from .kernels import BACKEND
from .vacuum import VacuumVector, apply, pairing, transpose, vacuum_expectation

__version__ = "0.1.0"
