# Copyright 2025, seifert-kappa contributors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
from .config import OUTPUT_FORMATS, SeifertConfig, default_settings
from .exact import CyclotomicValue, as_rational, numerically_equal, trig_value
from .eta import (
    CorrectionVector,
    LensSpaceData,
    N_FAMILY,
    P_FAMILY,
    admissible_L,
    alpha_invariant_lens,
    alpha_invariant_seifert,
    correction_closed_form,
    correction_term,
    correction_vector,
    dirac_eta_from_corrections,
    eta_sign,
    eta_sign_brute,
    family_sphere,
    forward_corrections,
)
from .kappa import (
    KappaSet,
    PosetVector,
    count_A,
    count_B,
    doubling_map,
    graded_kappa,
    gradings_match,
    has_multiple_elements,
    kappa_multiplicity,
    kappa_set,
    n_vector,
)
from .obstruct import (
    CATALOG_NAMES,
    EXCLUDED,
    HYPOTHESES_UNMET,
    NOT_EXCLUDED,
    EquivariantManifoldData,
    FixedPointData,
    ManifoldCatalogEntry,
    catalog_entry,
    check_cobordism,
    check_filling,
    cobordism_list,
    cobordism_verdict,
    comparing_identity,
    e8_cancellation,
    e8_expected_data,
    e8_fixed_point_data,
    filling_verdict,
    free_stabilize,
    h_cobordism_check,
    ht_stabilize,
    milnor_fiber,
    min_free_stabilizations,
    nonextension_verdict,
    p_family_offset,
    sharpness,
    sigma0_via_cosecant,
    sigma_vector,
    verdict_report,
)
from .seifert import (
    LineBundleData,
    SeifertConstants,
    SeifertData,
    SeifertFibration,
    brieskorn_components,
    csd_from_rotation,
    derive_constants,
    homology_sphere_fibration,
    rotation_number,
    rotation_closed_form,
    rotation_table,
)
from .sums import (
    CosecantSumSpec,
    DedekindDieterSpec,
    DedekindRademacherSpec,
    DedekindSpec,
    cosecant_closed_form,
    evaluate,
)
from .util import SeifertKappaError
