"""AND-optimal XOR-AND circuits for all leave-one-out products of n inputs."""

from .anf import (
    Anf,
    Monomial,
    TruthTable,
    anf_add,
    anf_degree,
    anf_from_truth_table,
    anf_multiply,
    anf_to_truth_table,
)
from .circuit import AND, CONST1, INPUT, NOT, XOR, Circuit, CircuitBuilder
from .io_formats import (
    BristolFormatError,
    export_bristol,
    export_dot,
    export_json,
    import_bristol,
)
from .synth import (
    BASELINE,
    OPTIMAL,
    SynthesisPlan,
    build_sigma,
    build_stage2,
    build_stage3,
    degree_lower_bound,
    synthesize,
    synthesize_plan,
)
from .verify import (
    VerificationReport,
    check_exhaustive,
    check_lemma_suite,
    check_sampled,
    compare_circuits_sampled,
    reference_anf,
    reference_f,
    reference_table_bits,
    sigma_anf,
)

__all__ = [
    "Anf",
    "Monomial",
    "TruthTable",
    "anf_add",
    "anf_degree",
    "anf_from_truth_table",
    "anf_multiply",
    "anf_to_truth_table",
    "AND",
    "CONST1",
    "INPUT",
    "NOT",
    "XOR",
    "Circuit",
    "CircuitBuilder",
    "BristolFormatError",
    "export_bristol",
    "export_dot",
    "export_json",
    "import_bristol",
    "BASELINE",
    "OPTIMAL",
    "SynthesisPlan",
    "build_sigma",
    "build_stage2",
    "build_stage3",
    "degree_lower_bound",
    "synthesize",
    "synthesize_plan",
    "VerificationReport",
    "check_exhaustive",
    "check_lemma_suite",
    "check_sampled",
    "compare_circuits_sampled",
    "reference_anf",
    "reference_f",
    "reference_table_bits",
    "sigma_anf",
]

__version__ = "0.1.0"
