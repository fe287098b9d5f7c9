"""Kernels, list-coloring solvers and SAT reductions for q-COLORING with a modulator."""

from .certificates import Certificate, extract_no_certificate, g_bound, make_irreducible_path, make_irreducible_splitco
from .errors import EnvelopeExceeded, NotCograph, ParseError, PreconditionError
from .formats import parse_dimacs_cnf, parse_instance, write_dimacs_cnf, write_instance
from .graphs import Cotree, Graph, GraphClass, build_cotree, join_height, recognize, verify_modulator
from .kernelize import (
    Envelope,
    KernelResult,
    VcKernelEncoding,
    decode_vc_kernel,
    dominated_kernelize_3col,
    encode_vc_kernel,
    generic_kernelize,
    lift_list_to_coloring,
    vc_kernelize,
)
from .oracle import Decision, Instance, brute_force_list_color, check_equivalence, check_irreducible_no
from .reductions import (
    CnfFormula,
    cnf_to_3col_linforest,
    connect_to_single_path,
    naesat_to_qcol,
    pad_clauses,
    qcnf_to_naesat,
    tcnf_via_irreducible,
)

__version__ = "0.1.0"
