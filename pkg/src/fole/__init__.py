"""Finite classifications, schemas, universes and structures of the
entity-relationship-attribute model, with exhaustive law checks."""

from .classification import (
    Classification,
    Infomorphism,
    check_infomorphism,
    compose_infomorphisms,
    extent,
    factorize_infomorphism,
    identity_infomorphism,
    inverse_image_by_instances,
    inverse_image_by_types,
    parallel_sum,
)
from .fibration import (
    FiberedMorphismWitness,
    bridge_schema,
    bridge_universe,
    check_fixed_fiber_morphism,
    factorize_structure_morphism,
    image_along_universe,
    reduct_along_schema,
)
from .interpretation import (
    Relation,
    Table,
    key_embedded_table,
    morphic_preimage_check,
    tabular_interpretation,
    traditional_interpretation,
)
from .linearization import (
    LinQuad,
    OlogGraph,
    OlogInstance,
    delinearize,
    export_eav,
    export_ntriples,
    linearize,
    olog_instance,
    olog_schema,
    skeleton,
    unify,
)
from .lists import (
    IndexedList,
    SignatureMorphism,
    check_signature_morphism,
    classify_tuple,
    project_tuple,
    sum_along,
    tuples_of,
)
from .schema import (
    Schema,
    SchemaMorphism,
    Universe,
    UniverseMorphism,
    check_schema_morphism,
    check_universe_morphism,
    compose_schema_morphisms,
    compose_universe_morphisms,
)
from .structure import (
    Structure,
    StructureMorphism,
    check_integrity,
    check_overlap_coherence,
    check_structure,
    check_structure_morphism,
    compose_structure_morphisms,
    identity_structure_morphism,
    is_extensive,
    key_embed,
    key_embed_morphism,
)
from .verdict import Verdict, Violation

__version__ = "0.1.0"
