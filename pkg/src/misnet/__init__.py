"""Sequential MIS/kernel-network dynamics on graphs and digraphs."""

from .graphs import (DiGraph, Graph6Error, benjamins, bit_list, bits,
                     closed_twins, compose, compose_one, family, format_digraph6,
                     format_graph6, is_tethered, iter_bits, mask_from_str,
                     mask_to_str, parse_graph6, read_graph6_file,
                     spanning_out_forest, strong_components)
from .networks import (NetworkKind, apply_word, batch_apply, fixed_points,
                       is_fixed_point, is_permutation, update_vertex)
from .decide import (Certificate, fixes_mis, has_nontrivial_fixing_set,
                     has_nontrivial_nondistrict, ind_fixing_word,
                     dom_fixing_word, is_constituency, is_district,
                     is_fixing_set, maximal_independent_sets,
                     normalize_complete, normalize_empty, prefixes_mis,
                     suffixes_mis)
from .reach import (ReachabilityVerdict, bfs_reachability_oracle,
                    dom_reachable, ind_reachable, mis_reach_some_fixed_point,
                    mis_reachable, mis_universal)
from .permis import (Orientation, PermisReport, PermisSearch,
                     comparability_orientation, composition_permis,
                     find_permis, is_covered, is_near_comparability,
                     is_near_transitive_vertex, is_permis,
                     is_transitive_vertex, orientation_of)
from .kernelfix import KernelFixability, kernel_fixable, profile_search, word_fix_fraction

__all__ = [name for name in dir() if not name.startswith("_")]
