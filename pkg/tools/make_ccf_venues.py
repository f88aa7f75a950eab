#!/usr/bin/env python3
"""Generate the packaged CCF venue catalogue (src/scholarslice/data/ccf_venues.json).

Deterministic: no randomness. A set of well-known venues anchors each of the
ten categories; generated venues with well-separated names fill each category
to its quota (571 total). Alias spellings include acronyms and abbreviated
forms. The script validates the result through the package's own loader, so
normalized-alias collisions fail the build rather than the user.

Run from the repository root:  python tools/make_ccf_venues.py
"""

from __future__ import annotations

import json
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from scholarslice.venues import CCF_CATEGORIES, venues_from_json  # noqa: E402

TOTAL = 571

# (category index, id, canonical, extra aliases, rank)
ANCHORS = [
    (0, "isca", "International Symposium on Computer Architecture", ["ISCA"], "A"),
    (0, "micro", "IEEE/ACM International Symposium on Microarchitecture", ["MICRO"], "A"),
    (0, "asplos", "International Conference on Architectural Support for Programming Languages and Operating Systems", ["ASPLOS"], "A"),
    (0, "sosp", "ACM Symposium on Operating Systems Principles", ["SOSP"], "A"),
    (0, "eurosys", "European Conference on Computer Systems", ["EuroSys"], "A"),
    (0, "fast", "USENIX Conference on File and Storage Technologies", ["FAST"], "A"),
    (0, "tocs", "ACM Transactions on Computer Systems", ["TOCS", "ACM Trans. Comput. Syst."], "A"),
    (1, "sigcomm", "ACM SIGCOMM Conference", ["SIGCOMM"], "A"),
    (1, "nsdi", "USENIX Symposium on Networked Systems Design and Implementation", ["NSDI"], "A"),
    (1, "infocom", "IEEE Conference on Computer Communications", ["INFOCOM"], "A"),
    (1, "ton", "IEEE/ACM Transactions on Networking", ["ToN", "IEEE ACM Trans. Netw."], "A"),
    (2, "sp", "IEEE Symposium on Security and Privacy", ["S&P", "Oakland"], "A"),
    (2, "ccs", "ACM Conference on Computer and Communications Security", ["CCS"], "A"),
    (2, "usenix-security", "USENIX Security Symposium", ["USENIX Security"], "A"),
    (2, "ndss", "Network and Distributed System Security Symposium", ["NDSS"], "A"),
    (2, "tdsc", "IEEE Transactions on Dependable and Secure Computing", ["TDSC"], "A"),
    (3, "icse", "International Conference on Software Engineering", ["ICSE"], "A"),
    (3, "fse", "ACM Joint European Software Engineering Conference and Symposium on the Foundations of Software Engineering", ["ESEC/FSE", "FSE"], "A"),
    (3, "popl", "ACM SIGPLAN Symposium on Principles of Programming Languages", ["POPL"], "A"),
    (3, "pldi", "ACM SIGPLAN Conference on Programming Language Design and Implementation", ["PLDI"], "A"),
    (3, "tse", "IEEE Transactions on Software Engineering", ["TSE", "IEEE Trans. Software Eng."], "A"),
    (3, "toplas", "ACM Transactions on Programming Languages and Systems", ["TOPLAS"], "A"),
    (4, "sigmod", "ACM SIGMOD Conference on Management of Data", ["SIGMOD"], "A"),
    (4, "vldb", "International Conference on Very Large Data Bases", ["VLDB", "PVLDB"], "A"),
    (4, "icde", "IEEE International Conference on Data Engineering", ["ICDE"], "A"),
    (4, "kdd", "ACM SIGKDD Conference on Knowledge Discovery and Data Mining", ["KDD", "SIGKDD"], "A"),
    (4, "tkde", "IEEE Transactions on Knowledge and Data Engineering", ["TKDE", "IEEE Trans. Knowl. Data Eng."], "A"),
    (4, "tods", "ACM Transactions on Database Systems", ["TODS"], "A"),
    (4, "cikm", "ACM International Conference on Information and Knowledge Management", ["CIKM"], "B"),
    (5, "stoc", "ACM Symposium on Theory of Computing", ["STOC"], "A"),
    (5, "focs", "IEEE Symposium on Foundations of Computer Science", ["FOCS"], "A"),
    (5, "soda", "ACM-SIAM Symposium on Discrete Algorithms", ["SODA"], "A"),
    (5, "jacm", "Journal of the ACM", ["JACM", "J. ACM"], "A"),
    (6, "tvcg", "IEEE Transactions on Visualization and Computer Graphics", [
        "IEEE Trans. Vis. Comput. Graph.",
        "IEEE TVCG",
        "TVCG",
        "Visualization and Computer Graphics, IEEE Transactions on",
    ], "A"),
    (6, "tog", "ACM Transactions on Graphics", ["TOG", "ACM Trans. Graph."], "A"),
    (6, "mm", "ACM International Conference on Multimedia", ["ACM MM", "ACM Multimedia"], "A"),
    (6, "cgf", "Computer Graphics Forum", ["CGF", "Comput. Graph. Forum"], "B"),
    (6, "eurovis", "Eurographics Conference on Visualization", ["EuroVis"], "B"),
    (7, "aaai", "AAAI Conference on Artificial Intelligence", ["AAAI"], "A"),
    (7, "neurips", "Annual Conference on Neural Information Processing Systems", ["NeurIPS", "NIPS"], "A"),
    (7, "icml", "International Conference on Machine Learning", ["ICML"], "A"),
    (7, "ijcai", "International Joint Conference on Artificial Intelligence", ["IJCAI"], "A"),
    (7, "acl", "Annual Meeting of the Association for Computational Linguistics", ["ACL"], "A"),
    (7, "cvpr", "IEEE/CVF Conference on Computer Vision and Pattern Recognition", ["CVPR"], "A"),
    (7, "tpami", "IEEE Transactions on Pattern Analysis and Machine Intelligence", ["TPAMI", "IEEE Trans. Pattern Anal. Mach. Intell."], "A"),
    (7, "jmlr", "Journal of Machine Learning Research", ["JMLR", "J. Mach. Learn. Res."], "A"),
    (8, "chi", "ACM CHI Conference on Human Factors in Computing Systems", ["CHI"], "A"),
    (8, "cscw", "ACM Conference on Computer Supported Cooperative Work and Social Computing", ["CSCW"], "A"),
    (8, "uist", "ACM Symposium on User Interface Software and Technology", ["UIST"], "A"),
    (8, "ubicomp", "ACM International Joint Conference on Pervasive and Ubiquitous Computing", ["UbiComp"], "A"),
    (8, "tochi", "ACM Transactions on Computer-Human Interaction", ["TOCHI"], "A"),
    (9, "www", "The Web Conference", ["WWW", "International World Wide Web Conference"], "A"),
    (9, "recomb", "International Conference on Research in Computational Molecular Biology", ["RECOMB"], "B"),
    (9, "bioinformatics", "Bioinformatics", ["Bioinform."], "B"),
    (9, "tcbb", "IEEE/ACM Transactions on Computational Biology and Bioinformatics", ["TCBB"], "B"),
]

# Word banks per category for generated venues. Phrases are kept lexically far
# apart so small spelling perturbations cannot jump between venues.
ADJECTIVES = {
    0: ["Scalable", "Heterogeneous", "Reconfigurable", "Neuromorphic", "Embedded", "Resilient", "Energy-Aware", "Speculative"],
    1: ["Programmable", "Wireless", "Latency-Bounded", "Satellite", "Vehicular", "Optical", "Peer-to-Peer", "Cognitive"],
    2: ["Adversarial", "Post-Quantum", "Hardware-Rooted", "Privacy-Preserving", "Forensic", "Zero-Trust", "Covert", "Verifiable"],
    3: ["Refactoring-Aware", "Contract-Based", "Gradual", "Self-Healing", "Specification-Driven", "Mutation-Guided", "Effectful", "Incremental"],
    4: ["Streaming", "Columnar", "Probabilistic", "Versioned", "Federated", "Temporal", "Graph-Native", "Approximate"],
    5: ["Parameterized", "Fine-Grained", "Sublinear", "Algebraic", "Communication-Bounded", "Randomized", "Hardness-Oriented", "Extremal"],
    6: ["Volumetric", "Procedural", "Perceptual", "Photorealistic", "Sketch-Based", "Immersive", "Differentiable", "Tiled"],
    7: ["Causal", "Multimodal", "Few-Shot", "Neuro-Symbolic", "Curriculum-Driven", "Embodied", "Continual", "Compositional"],
    8: ["Tangible", "Accessibility-First", "Gaze-Aware", "Haptic", "Crowd-Sourced", "Affective", "Wearable", "Conversational"],
    9: ["Genomic", "Climatological", "Urban-Scale", "Epidemiological", "Astronomical", "Socio-Technical", "Bibliometric", "Agricultural"],
}
NOUNS = {
    0: ["Microarchitectures", "Memory Hierarchies", "Interconnect Fabrics", "Accelerator Design", "Cache Coherence", "Pipeline Engineering", "Storage Stacks"],
    1: ["Packet Scheduling", "Routing Protocols", "Edge Gateways", "Spectrum Allocation", "Transport Layers", "Mesh Deployments", "Congestion Control"],
    2: ["Intrusion Detection", "Key Management", "Malware Analysis", "Threat Modeling", "Sandbox Escapes", "Protocol Auditing", "Credential Hygiene"],
    3: ["Program Synthesis", "Type Systems", "Build Orchestration", "Defect Prediction", "Code Review Practice", "Module Composition", "Test Oracles"],
    4: ["Query Optimization", "Index Structures", "Schema Evolution", "Data Provenance", "Entity Resolution", "Workload Forecasting", "Transaction Semantics"],
    5: ["Complexity Bounds", "Combinatorial Optimization", "Proof Systems", "Automata Theory", "Lattice Problems", "Counting Classes", "Metric Embeddings"],
    6: ["Mesh Processing", "Appearance Capture", "Scene Illumination", "Shape Retrieval", "Animation Pipelines", "Texture Synthesis", "Point Cloud Rendering"],
    7: ["Representation Learning", "Policy Optimization", "Knowledge Grounding", "Concept Discovery", "Reward Modeling", "Inference Scaling", "Agent Coordination"],
    8: ["Interaction Techniques", "Interface Auditing", "Participatory Design", "Input Devices", "Annotation Workflows", "Usability Metrics", "Collaboration Spaces"],
    9: ["Sequence Assembly", "Sensor Fusion", "Mobility Modeling", "Outbreak Analytics", "Sky Surveys", "Archive Curation", "Yield Prediction"],
}
TEMPLATES = [
    ("International Conference on {}", "conf"),
    ("IEEE Transactions on {}", "journal"),
    ("ACM Symposium on {}", "conf"),
    ("Journal of {}", "journal"),
    ("International Workshop on {}", "conf"),
]


def make_acronym(canonical: str, taken: set[str]) -> str | None:
    words = [w for w in canonical.replace("-", " ").split() if w[0].isupper() or w[0].isdigit()]
    acro = "".join(w[0] for w in words).upper()
    if len(acro) < 3 or acro.lower() in taken:
        return None
    return acro


def main() -> None:
    per_category = [57] * 10
    per_category[6] = 58  # graphics holds the extra venue
    assert sum(per_category) == TOTAL

    venues = []
    taken_norms: set[str] = set()

    def norm(s: str) -> str:
        t = re.sub(r"[^a-z0-9\s]", " ", s.lower()).split()
        while t and t[0] in ("a", "an", "the"):
            t.pop(0)
        return " ".join(t)

    def claim(names: list[str]) -> bool:
        ns = [norm(n) for n in names]
        if any(not n or n in taken_norms for n in ns):
            return False
        taken_norms.update(ns)
        return True

    counts = [0] * 10
    for cat_idx, vid, canonical, aliases, rank in ANCHORS:
        if not claim([canonical] + aliases):
            raise SystemExit(f"anchor alias collision for {vid}")
        venues.append(
            {
                "id": vid,
                "canonical": canonical,
                "aliases": aliases,
                "category": CCF_CATEGORIES[cat_idx],
                "rank": rank,
            }
        )
        counts[cat_idx] += 1

    ranks = ["A", "B", "C"]
    for cat_idx in range(10):
        adjs, nouns = ADJECTIVES[cat_idx], NOUNS[cat_idx]
        combo = 0
        while counts[cat_idx] < per_category[cat_idx]:
            adj = adjs[combo % len(adjs)]
            noun = nouns[(combo // len(adjs)) % len(nouns)]
            template, kind = TEMPLATES[combo % len(TEMPLATES)]
            combo += 1
            topic = f"{adj} {noun}"
            canonical = template.format(topic)
            acro = make_acronym(canonical, taken_norms)
            aliases = [acro] if acro else []
            # an abbreviated spelling as a second alias for journals
            if kind == "journal" and canonical.startswith("IEEE"):
                aliases.append(f"IEEE Trans. {topic}")
            if not claim([canonical] + aliases):
                continue
            vid = norm(topic).replace(" ", "-") + ("-j" if kind == "journal" else "-c")
            if any(v["id"] == vid for v in venues):
                vid = f"{vid}{combo}"
            venues.append(
                {
                    "id": vid,
                    "canonical": canonical,
                    "aliases": aliases,
                    "category": CCF_CATEGORIES[cat_idx],
                    "rank": ranks[counts[cat_idx] % 3],
                }
            )
            counts[cat_idx] += 1

    venues.sort(key=lambda v: v["id"])
    table = venues_from_json(venues)
    assert len(table) == TOTAL, len(table)
    tvcg_variants = [
        "IEEE Transactions on Visualization and Computer Graphics",
        "IEEE Trans. Vis. Comput. Graph.",
        "IEEE TVCG",
        "TVCG",
        "Visualization and Computer Graphics, IEEE Transactions on",
    ]
    assert all(table.resolve(v) == "tvcg" for v in tvcg_variants)

    out = ROOT / "src" / "scholarslice" / "data" / "ccf_venues.json"
    out.write_text(json.dumps(venues, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(venues)} venues -> {out}")


if __name__ == "__main__":
    main()
