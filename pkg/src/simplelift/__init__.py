"""Self-intersection, simple lifts to finite covers, and length growth for curves on a pair of pants."""

__version__ = "0.1.0"

from .words import CyclicWord, Letter, gamma_n, invert, parse, power_root
from .ribbon import (RibbonGraph, boundary_walks, cover_ribbon, euler_and_genus, pants_base,
                     walk_labels)
from .intersection import CurvePath, as_path, crossing, is_simple, self_intersection
from .covers import (Elevation, NotFoundUpTo, PermCover, elevations, enumerate_covers,
                     hall_count, min_simple_lift_degree, sigma_of_word)
from .hyperbolic import (HolonomyRep, Isometry, PantsMetric, geodesic_length, ortho_distance,
                         pants_holonomy, thrice_punctured_holonomy, trace_to_length)
from .growth import (GrowthWitness, compact_witness, cusped_witness, f_S_lower, find_threshold_n0,
                     growth_table, table_to_csv)
