"""scholarslice: set algebra, citation metrics, and alignable hierarchical
histograms over bibliographic snapshots.

Typical flow: load a corpus, combine scholars' paper sets with operator
labels, then slice a set along an attribute chain into a hierarchy and
compare two hierarchies in an aligned upper/lower layout.

    from scholarslice import load_corpus, CombinationSpec, combine, build_hierarchy

    corpus = load_corpus("papers.jsonl", "citations.csv", "venues.json", "profiles.jsonl")
    spec = CombinationSpec.from_strings({"s1": "and", "s2": "and"})
    joint = combine(corpus, spec)
    hier = build_hierarchy(corpus, joint, [AttributeKey.P_YEAR, AttributeKey.P_VENUE])
"""

from . import errors
from .compare import (
    AlignedComparison,
    AlignedSlot,
    ComparisonDescription,
    align,
    comparison_to_dict,
    describe_comparison,
)
from .corpus import (
    UNKNOWN,
    Corpus,
    LoadReport,
    PaperRecord,
    ScholarProfile,
    UnknownValue,
    build_corpus,
    load_corpus,
)
from .expressions import parse_expression, spec_from_expression
from .histogram import (
    DEFAULT_THRESHOLDS,
    MAX_CHAIN,
    AttributeKey,
    BucketThresholds,
    CitationBucket,
    Group,
    GroupSpec,
    Hierarchy,
    HistNode,
    LinkElement,
    Measure,
    Mode,
    ScaleKind,
    attribute_value,
    bucket_citations,
    build_hierarchy,
    elements_of,
    hierarchy_to_dict,
    reorder_chain,
    scale_heights,
    value_label,
    year_group,
)
from .metrics import SetMetrics, citation_count, h_index, paper_h_index, set_metrics
from .sets import (
    CoauthorStat,
    CombinationSpec,
    OperatorLabel,
    PaperSet,
    coauthor_stats,
    combine,
    filter_years,
    format_label,
    papers_of,
    timeline,
)
from .store import canonical_json, corpus_from_dict, corpus_to_dict, load_store, save_store
from .venues import (
    CCF_CATEGORIES,
    CcfRank,
    VenueRecord,
    VenueTable,
    levenshtein,
    load_venues,
    normalize_name,
    packaged_venue_table,
)

__version__ = "0.1.0"

__all__ = [
    "errors",
    "UNKNOWN",
    "UnknownValue",
    "Corpus",
    "PaperRecord",
    "ScholarProfile",
    "LoadReport",
    "build_corpus",
    "load_corpus",
    "CCF_CATEGORIES",
    "CcfRank",
    "VenueRecord",
    "VenueTable",
    "normalize_name",
    "levenshtein",
    "load_venues",
    "packaged_venue_table",
    "OperatorLabel",
    "CombinationSpec",
    "PaperSet",
    "CoauthorStat",
    "papers_of",
    "combine",
    "format_label",
    "coauthor_stats",
    "timeline",
    "filter_years",
    "SetMetrics",
    "h_index",
    "citation_count",
    "paper_h_index",
    "set_metrics",
    "Mode",
    "AttributeKey",
    "Measure",
    "CitationBucket",
    "BucketThresholds",
    "DEFAULT_THRESHOLDS",
    "MAX_CHAIN",
    "bucket_citations",
    "LinkElement",
    "elements_of",
    "attribute_value",
    "value_label",
    "Group",
    "GroupSpec",
    "year_group",
    "HistNode",
    "Hierarchy",
    "build_hierarchy",
    "reorder_chain",
    "ScaleKind",
    "scale_heights",
    "hierarchy_to_dict",
    "AlignedSlot",
    "AlignedComparison",
    "align",
    "ComparisonDescription",
    "describe_comparison",
    "comparison_to_dict",
    "parse_expression",
    "spec_from_expression",
    "canonical_json",
    "save_store",
    "load_store",
    "corpus_to_dict",
    "corpus_from_dict",
    "__version__",
]
