// Wire types for the scholarslice HTTP API. Field names mirror the JSON
// exactly, so everything here is snake_case.

export type OperatorName = 'and' | 'or' | 'not' | 'ignore';
export type Mode = 'papers' | 'citations';
export type Measure = 'papers' | 'citations' | 'hindex';
export type ScaleKind = 'linear' | 'sqrt' | 'log';
export type Role = 'upper' | 'lower' | null;

export interface Scholar {
    id: string;
    name: string;
    paper_count: number;
}

export interface ScholarList {
    scholars: Scholar[];
}

export interface Coauthor {
    id: string;
    name: string;
    co_papers: number;
    total_papers: number;
}

export interface CoauthorList {
    focus: Scholar;
    coauthors: Coauthor[];
}

export interface SetSummary {
    handle: string;
    label: string;
    paper_count: number;
    total_citations: number;
    h_index: number;
    role: Role;
    timeline: Record<string, number>;
}

export interface SetList {
    sets: SetSummary[];
}

export interface Thresholds {
    low_below: number;
    high_at_least: number;
}

export interface GroupBody {
    label: string;
    values: (string | number)[];
}

export interface GroupSpecBody {
    attribute: string;
    groups: GroupBody[];
    ignored: string[];
}

export interface HierarchyRequest {
    chain: string[];
    mode: Mode;
    measure: Measure;
    groups?: GroupSpecBody[];
    thresholds?: Thresholds;
    element_cap?: number;
}

/** Internal node of a hierarchy response; leaves carry the height fields. */
export interface HierarchyNode {
    attr: string | null;
    label: string;
    value: string | number | null;
    measure: number;
    width: number;
    group: boolean;
    children: HierarchyNode[];
    element_count?: number;
    element_ids?: string[];
    height_linear?: number;
    height_sqrt?: number;
    height_log?: number;
}

export interface HierarchyResponse {
    set_label: string;
    chain: string[];
    mode: Mode;
    measure: Measure;
    thresholds: Thresholds;
    root: HierarchyNode;
}

export interface DescriptionPart {
    0: string;
    1: 'upper' | 'separator' | 'lower';
}

export interface CompareDescription {
    aligned: boolean;
    upper: string;
    lower: string;
    combined: string | null;
    parts: [string, 'upper' | 'separator' | 'lower'][];
}

/** One side of an aligned slot. `empty` marks a zero-measure placeholder. */
export interface SlotSide {
    label: string;
    value: string | number | null;
    measure: number;
    width: number;
    group: boolean;
    empty: boolean;
    element_count: number;
    element_ids: string[];
    height_linear: number;
    height_sqrt: number;
    height_log: number;
}

export interface CompareSlot {
    attr: string;
    key: string;
    width: number;
    upper: SlotSide;
    lower: SlotSide;
    children: CompareSlot[];
}

export interface AlignedCompare {
    aligned: true;
    description: CompareDescription;
    upper_label: string;
    lower_label: string;
    chain: string[];
    offset: number;
    slots: CompareSlot[];
}

export interface SideBySideCompare {
    aligned: false;
    description: CompareDescription;
    upper_label: string;
    lower_label: string;
    offset: number;
    upper: HierarchyResponse;
    lower: HierarchyResponse;
}

export type CompareResponse = AlignedCompare | SideBySideCompare;

export interface CompareRequest {
    upper: string;
    lower: string;
    lock: boolean;
    align: boolean;
    offset?: number;
    request?: HierarchyRequest;
    upper_request?: HierarchyRequest;
    lower_request?: HierarchyRequest;
}

export interface ApiErrorBody {
    error: {
        code: string;
        message: string;
    };
}

export const PAPER_ATTRIBUTES = [
    'P.Year',
    'P.Venue',
    'P.CcfRank',
    'P.CitationBucket',
    'P.IndividualPaper',
];

export const CITER_ATTRIBUTES = [
    'C.Year',
    'C.Venue',
    'C.CcfRank',
    'C.CitationBucket',
    'C.IndividualPaper',
];

/** Attributes legal for a mode: C.* partitions exist only over citation links. */
export function attributesFor(mode: Mode): string[] {
    return mode === 'citations'
        ? [...PAPER_ATTRIBUTES, ...CITER_ATTRIBUTES]
        : [...PAPER_ATTRIBUTES];
}

/** Ordered attributes support range brushing and year offsets. */
export function isYearAttr(attr: string): boolean {
    return attr.endsWith('.Year');
}
