"""
Hierarchical histograms: slicing one set along an attribute chain
=================================================================

A chain of one to four attributes partitions a paper set level by level.
Internal bars aggregate their children; leaf bars carry the measure and
the surviving elements. Widths follow the leaf count, so the layout of
a bar never depends on how tall it is.
"""

from pathlib import Path

from scholarslice import (
    AttributeKey,
    CombinationSpec,
    Group,
    GroupSpec,
    ScaleKind,
    build_hierarchy,
    combine,
    load_corpus,
    scale_heights,
    year_group,
)

BASE = Path(__file__).resolve().parent.parent / "fixtures" / "corpus"
corpus = load_corpus(
    str(BASE / "papers.jsonl"),
    str(BASE / "citations.csv"),
    str(BASE / "venues.json"),
    str(BASE / "profiles.jsonl"),
)
ada = combine(corpus, CombinationSpec.from_strings({"s01": "and"}))


def show(node, indent=0):
    pad = "  " * indent
    bar = "#" * round(node.measure) if not node.children else ""
    print(f"{pad}{node.label:24s} w={node.width:<3d} m={node.measure:<5} {bar}")
    for child in node.children:
        show(child, indent + 1)


# Two levels: CCF rank, then publication year inside each rank.
h = build_hierarchy(corpus, ada, [AttributeKey.P_CCF_RANK, AttributeKey.P_YEAR])
print(f"=== {h.set_label}: rank, then year ===")
show(h.root)

# Bar grouping merges values into one bar. A group labeled "ignore" (or
# listed in ignored=...) is removed together with its papers, and every
# aggregate above it is computed without them.
spec = GroupSpec(
    AttributeKey.P_YEAR,
    [year_group(1995, 2009, label="early"), year_group(2010, 2019, label="2010s")],
)
grouped = build_hierarchy(corpus, ada, [AttributeKey.P_YEAR], group_specs=[spec])
print()
print("=== grouped years ===")
show(grouped.root)

# Heights are a separate concern from measures: pick a scale at render time.
leaves = grouped.root.children
measures = [leaf.measure for leaf in leaves]
for kind in ScaleKind:
    heights = [f"{v:.2f}" for v in scale_heights(measures, kind)]
    print(f"{kind.value:6s} {heights}")
