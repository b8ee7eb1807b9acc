"""Outdegree sequences forcing vertex-disjoint cycles in digraphs.

Library surface: sequence predicates (sequences), digraph values and I/O
(digraph), extremal constructions and the witness realizer (constructions),
exact disjoint-cycle search (cycles), and exhaustive small-n verification
(verify).  The ``cycleforce`` console script exposes the same functionality.
"""

from .constructions import (
    LayeredLayout,
    SequenceIsLargeError,
    hub_tournament,
    layered_sequence,
    layered_witness,
    realize_nonlarge,
    transitive_tournament,
)
from .cycles import enumerate_chordless_cycles, find_cycle, find_disjoint_cycles
from .digraph import (
    CycleWitness,
    Digraph,
    DigraphParseError,
    parse_digraph,
    render_digraph,
)
from .sequences import (
    DegreeSequence,
    LargenessCertificate,
    SequenceParseError,
    UnrealizableDegreeError,
    delete_term,
    forces_one,
    forces_two,
    is_large,
    is_large_exhaustive,
    is_rs_large,
    parse_sequence,
    pointwise_leq,
)
from .verify import (
    SequenceRecord,
    VerificationReport,
    adjudicate_intro_examples,
    check_sequence,
    enumerate_realizations,
    intro_example_sequences,
    search_counterexample,
    verify_fact_deletion,
    verify_theorem,
)

__all__ = [
    "CycleWitness",
    "DegreeSequence",
    "Digraph",
    "DigraphParseError",
    "LargenessCertificate",
    "LayeredLayout",
    "SequenceIsLargeError",
    "SequenceParseError",
    "SequenceRecord",
    "UnrealizableDegreeError",
    "VerificationReport",
    "adjudicate_intro_examples",
    "check_sequence",
    "delete_term",
    "enumerate_chordless_cycles",
    "enumerate_realizations",
    "find_cycle",
    "find_disjoint_cycles",
    "forces_one",
    "forces_two",
    "hub_tournament",
    "intro_example_sequences",
    "is_large",
    "is_large_exhaustive",
    "is_rs_large",
    "layered_sequence",
    "layered_witness",
    "parse_digraph",
    "parse_sequence",
    "pointwise_leq",
    "realize_nonlarge",
    "render_digraph",
    "search_counterexample",
    "transitive_tournament",
    "verify_fact_deletion",
    "verify_theorem",
]

__version__ = "0.1.0"
