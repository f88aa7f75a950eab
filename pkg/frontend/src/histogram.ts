// Histogram view: hierarchical bar charts over one or two registered sets.
// Bar geometry comes from the server's height fields for the active scale;
// the client only maps those to pixels, clamping tiny nonzero bars to a
// minimum height so they stay visible. In aligned mode both sides of every
// slot are drawn upward from the same baseline, taller bar behind, shorter
// bar on top in solid fill.

import { COLORS, clear, el, svg } from './dom.js';
import { Side, ViewState } from './state.js';
import {
    AlignedCompare,
    CompareResponse,
    CompareSlot,
    HierarchyNode,
    HierarchyResponse,
    Measure,
    Mode,
    ScaleKind,
    SlotSide,
    attributesFor,
    isYearAttr,
} from './types.js';

export const MIN_BAR_PX = 3;
const PANEL_W = 560;
const BAR_AREA_H = 140;
const BAND_H = 16;
const LABEL_H = 12;
const HIT_PAD = 5;

export interface HistogramViewDeps {
    state: ViewState;
    onTooltip: (text: string | null, x: number, y: number) => void;
}

export interface HistogramViewData {
    compare: CompareResponse | null;
    single: { side: Side; response: HierarchyResponse } | null;
    error: string | null;
}

// ---- layout ----

interface LeafBox {
    node: HierarchyNode;
    x: number;
}

interface Band {
    node: HierarchyNode;
    x: number;
    width: number;
    depth: number;
}

function layoutTree(root: HierarchyNode): { leaves: LeafBox[]; bands: Band[]; slots: number } {
    const leaves: LeafBox[] = [];
    const bands: Band[] = [];
    const walk = (node: HierarchyNode, x: number, depth: number): number => {
        if (node.children.length === 0) {
            leaves.push({ node, x });
            return x + 1;
        }
        const start = x;
        for (const child of node.children) {
            x = walk(child, x, depth + 1);
        }
        if (depth > 0) {
            bands.push({ node, x: start, width: x - start, depth });
        }
        return x;
    };
    if (root.children.length === 0) {
        return { leaves: [], bands: [], slots: 0 };
    }
    const slots = walk(root, 0, 0);
    return { leaves, bands, slots };
}

interface SlotLeaf {
    slot: CompareSlot;
    x: number;
}

interface SlotBand {
    slot: CompareSlot;
    x: number;
    width: number;
    depth: number;
}

function layoutSlots(slots: CompareSlot[]): { leaves: SlotLeaf[]; bands: SlotBand[]; total: number } {
    const leaves: SlotLeaf[] = [];
    const bands: SlotBand[] = [];
    const walk = (slot: CompareSlot, x: number, depth: number): number => {
        if (slot.children.length === 0) {
            leaves.push({ slot, x });
            return x + 1;
        }
        const start = x;
        for (const child of slot.children) {
            x = walk(child, x, depth + 1);
        }
        bands.push({ slot, x: start, width: x - start, depth });
        return x;
    };
    let x = 0;
    for (const slot of slots) {
        x = walk(slot, x, 1);
    }
    return { leaves, bands, total: x };
}

function heightOf(node: { height_linear?: number; height_sqrt?: number; height_log?: number }, scale: ScaleKind): number {
    if (scale === 'sqrt') return node.height_sqrt ?? 0;
    if (scale === 'log') return node.height_log ?? 0;
    return node.height_linear ?? 0;
}

/** Pixel height for a bar: zero stays zero, small nonzero is clamped visible. */
export function barPx(height: number, measure: number, factor: number): number {
    if (measure <= 0) {
        return 0;
    }
    return Math.max(MIN_BAR_PX, height * factor);
}

// ---- controls ----

function chainEditor(side: Side, deps: HistogramViewDeps): HTMLElement {
    const state = deps.state;
    const spec = state.panels[side];
    const options = attributesFor(spec.mode);
    const row = el('div', { class: `chain-editor chain-${side}` });
    spec.chain.forEach((attr, i) => {
        const select = el('select', {
            class: 'chain-attr',
            onchange: (ev: Event) => {
                const value = (ev.target as HTMLSelectElement).value;
                state.editPanel(side, s => { s.chain[i] = value; });
            },
        });
        for (const opt of options) {
            if (opt !== attr && spec.chain.includes(opt)) {
                continue;
            }
            const node = el('option', { value: opt }, opt);
            if (opt === attr) {
                node.setAttribute('selected', '');
            }
            select.append(node);
        }
        row.append(el('span', { class: 'chain-step' },
            select,
            el('button', {
                class: 'chain-left',
                disabled: i === 0,
                onclick: () => state.editPanel(side, s => {
                    [s.chain[i - 1], s.chain[i]] = [s.chain[i], s.chain[i - 1]];
                }),
            }, '<'),
            el('button', {
                class: 'chain-right',
                disabled: i === spec.chain.length - 1,
                onclick: () => state.editPanel(side, s => {
                    [s.chain[i], s.chain[i + 1]] = [s.chain[i + 1], s.chain[i]];
                }),
            }, '>'),
            el('button', {
                class: 'chain-remove',
                disabled: spec.chain.length === 1,
                onclick: () => state.editPanel(side, s => { s.chain.splice(i, 1); }),
            }, 'x'),
        ));
    });
    const unused = options.filter(o => !spec.chain.includes(o));
    row.append(el('button', {
        class: 'chain-add',
        disabled: spec.chain.length >= 4 || unused.length === 0,
        onclick: () => state.editPanel(side, s => { s.chain.push(unused[0]); }),
    }, '+'));
    return row;
}

function controls(deps: HistogramViewDeps): HTMLElement {
    const state = deps.state;
    const spec = state.panels.upper;
    const pick = (cls: string, value: string, opts: string[], set: (v: string) => void) => {
        const sel = el('select', {
            class: cls,
            onchange: (ev: Event) => set((ev.target as HTMLSelectElement).value),
        });
        for (const o of opts) {
            const node = el('option', { value: o }, o);
            if (o === value) {
                node.setAttribute('selected', '');
            }
            sel.append(node);
        }
        return sel;
    };
    const bar = el('div', { class: 'histogram-controls' },
        pick('pick-mode', spec.mode, ['papers', 'citations'], v => state.editPanel('upper', s => {
            s.mode = v as Mode;
            s.chain = s.chain.filter(a => attributesFor(s.mode).includes(a));
            if (s.chain.length === 0) {
                s.chain = ['P.Year'];
            }
        })),
        pick('pick-measure', spec.measure, ['papers', 'citations', 'hindex'], v =>
            state.editPanel('upper', s => { s.measure = v as Measure; })),
        pick('pick-scale', spec.scale, ['linear', 'sqrt', 'log'], v =>
            state.editPanel('upper', s => { s.scale = v as ScaleKind; })),
        el('button', {
            class: state.lock ? 'toggle-lock active' : 'toggle-lock',
            onclick: () => state.setLock(!state.lock),
        }, 'lock'),
        el('button', {
            class: state.align ? 'toggle-align active' : 'toggle-align',
            onclick: () => state.setAlign(!state.align),
        }, 'align'),
    );
    if (state.align && isYearAttr(state.panels.upper.chain[0] ?? '')) {
        bar.append(el('input', {
            class: 'offset-input',
            type: 'number',
            value: state.offset,
            title: 'year offset applied to the lower set',
            onchange: (ev: Event) => {
                state.setOffset(Number((ev.target as HTMLInputElement).value) || 0);
            },
        }));
    }
    return bar;
}

function groupChips(side: Side, deps: HistogramViewDeps): HTMLElement {
    const state = deps.state;
    const spec = state.panels[side];
    const row = el('div', { class: `group-chips chips-${side}` });
    for (const entry of spec.groups) {
        if (!spec.chain.includes(entry.attribute)) {
            continue;
        }
        for (const group of entry.groups) {
            const input = el('input', {
                class: 'group-rename',
                value: group.label,
                onchange: (ev: Event) => {
                    state.renameGroup(side, entry.attribute, group.label,
                        (ev.target as HTMLInputElement).value);
                },
            });
            row.append(el('span', { class: 'group-chip', 'data-attr': entry.attribute },
                input,
                el('button', {
                    class: 'group-remove',
                    onclick: () => state.removeGroup(side, entry.attribute, group.label),
                }, '-'),
            ));
        }
        for (const label of entry.ignored) {
            row.append(el('span', { class: 'ignored-chip', 'data-attr': entry.attribute },
                label,
                el('button', {
                    class: 'ignored-restore',
                    onclick: () => state.editPanel(side, s => {
                        const e = s.groups.find(g => g.attribute === entry.attribute);
                        if (e) {
                            e.ignored = e.ignored.filter(l => l !== label);
                        }
                    }),
                }, 'restore'),
            ));
        }
    }
    return row;
}

function minimap(side: Side, deps: HistogramViewDeps): HTMLElement {
    const state = deps.state;
    const win = state.minimaps[side];
    const strip = svg('svg', { class: 'minimap-strip', width: PANEL_W, height: 8 },
        svg('rect', { x: 0, y: 0, width: PANEL_W, height: 8, fill: '#eee' }),
        svg('rect', {
            class: 'minimap-window',
            x: win.start * PANEL_W,
            y: 0,
            width: win.span * PANEL_W,
            height: 8,
            fill: '#bbb',
        }),
    );
    return el('div', { class: `minimap minimap-${side}` },
        strip,
        el('input', {
            class: 'minimap-start',
            type: 'range', min: 0, max: 100, step: 1,
            value: Math.round(win.start * 100),
            oninput: (ev: Event) => {
                const v = Number((ev.target as HTMLInputElement).value) / 100;
                state.setMinimap(side, { start: v, span: state.minimaps[side].span });
            },
        }),
        el('input', {
            class: 'minimap-span',
            type: 'range', min: 5, max: 100, step: 1,
            value: Math.round(win.span * 100),
            oninput: (ev: Event) => {
                const v = Number((ev.target as HTMLInputElement).value) / 100;
                state.setMinimap(side, { start: state.minimaps[side].start, span: v });
            },
        }),
    );
}

// ---- single-hierarchy panel ----

function attachLeafBrush(
    chart: SVGElement,
    overlay: SVGElement,
    leaves: LeafBox[],
    slotW: number,
    shift: number,
    attr: string,
    side: Side,
    deps: HistogramViewDeps,
): void {
    if (!isYearAttr(attr)) {
        return;
    }
    let anchor: number | null = null;
    const slotAt = (ev: PointerEvent): number => {
        const left = (chart as unknown as Element).getBoundingClientRect().left;
        const x = ev.clientX - left + shift;
        return Math.min(leaves.length - 1, Math.max(0, Math.floor(x / slotW)));
    };
    overlay.addEventListener('pointerdown', ev => {
        anchor = slotAt(ev as PointerEvent);
    });
    overlay.addEventListener('pointerup', ev => {
        if (anchor === null) {
            return;
        }
        const other = slotAt(ev as PointerEvent);
        const lo = Math.min(anchor, other);
        const hi = Math.max(anchor, other);
        anchor = null;
        if (lo >= hi) {
            return;
        }
        const years = leaves.slice(lo, hi + 1)
            .map(l => l.node.value)
            .filter((v): v is number => typeof v === 'number');
        if (years.length < 2) {
            return;
        }
        deps.state.addYearGroup(side, attr, Math.min(...years), Math.max(...years));
    });
}

function hierarchyPanel(
    side: Side,
    response: HierarchyResponse,
    deps: HistogramViewDeps,
): HTMLElement {
    const state = deps.state;
    const spec = state.panels[side];
    const color = side === 'upper' ? COLORS.upper : COLORS.lower;
    const { leaves, bands, slots } = layoutTree(response.root);
    const panel = el('div', { class: `histogram-panel panel-${side}` },
        el('div', { class: 'panel-header', style: `color:${color}` },
            el('span', { class: 'panel-label' }, response.set_label),
            el('span', { class: 'panel-total' }, ` ${response.root.measure} ${response.measure}`),
        ),
        chainEditor(side, deps),
    );
    if (slots === 0) {
        panel.append(el('p', { class: 'placeholder' }, 'empty set'));
        return panel;
    }

    const win = state.minimaps[side];
    const contentW = PANEL_W / win.span;
    const slotW = contentW / slots;
    const shift = win.start * contentW;
    const bandArea = (response.chain.length - 1) * BAND_H;
    const baseline = bandArea + BAR_AREA_H;
    const chart = svg('svg', {
        class: 'hierarchy-chart',
        width: PANEL_W,
        height: baseline + LABEL_H,
    });
    const body = svg('g', { transform: `translate(${-shift},0)` });
    chart.append(body);

    let maxH = 0;
    for (const leaf of leaves) {
        maxH = Math.max(maxH, heightOf(leaf.node, spec.scale));
    }
    const factor = maxH > 0 ? (BAR_AREA_H - 4) / maxH : 0;

    for (const band of bands) {
        const y = (band.depth - 1) * BAND_H;
        body.append(svg('rect', {
            class: 'level-band',
            x: band.x * slotW + 1,
            y: y + 1,
            width: band.width * slotW - 2,
            height: BAND_H - 2,
            fill: band.node.group ? COLORS.group : '#ddd',
            opacity: 0.7,
        }));
        if (band.width * slotW > 24) {
            body.append(svg('text', {
                class: 'band-label',
                x: band.x * slotW + 4,
                y: y + BAND_H - 5,
                'font-size': 9,
            }, band.node.label));
        }
    }

    const leafAttr = response.chain[response.chain.length - 1];
    for (const leaf of leaves) {
        const h = barPx(heightOf(leaf.node, spec.scale), leaf.node.measure, factor);
        const bar = svg('rect', {
            class: leaf.node.group ? 'leaf-bar group-bar' : 'leaf-bar',
            'data-label': leaf.node.label,
            x: leaf.x * slotW + 1,
            y: baseline - h,
            width: Math.max(1, slotW - 2),
            height: h,
            fill: leaf.node.group ? COLORS.group : color,
        });
        body.append(bar);
        body.append(svg('rect', {
            class: 'hit-area',
            x: leaf.x * slotW + 1 - HIT_PAD,
            y: baseline - h - HIT_PAD,
            width: Math.max(1, slotW - 2) + 2 * HIT_PAD,
            height: h + 2 * HIT_PAD,
            fill: 'transparent',
            onpointerenter: (ev: Event) => {
                const me = ev as PointerEvent;
                deps.onTooltip(`${leaf.node.label}: ${leaf.node.measure}`, me.clientX, me.clientY);
            },
            onpointerleave: () => deps.onTooltip(null, 0, 0),
        }));
        if (slotW >= 12) {
            body.append(svg('text', {
                class: 'bar-minus',
                x: leaf.x * slotW + slotW / 2 - 2,
                y: baseline + LABEL_H - 2,
                'font-size': 9,
                style: 'cursor:pointer',
                onclick: () => state.ignoreBar(side, leafAttr, leaf.node.label),
            }, '-'));
        }
    }

    const overlay = svg('rect', {
        class: 'leaf-brush',
        x: 0, y: bandArea, width: PANEL_W, height: BAR_AREA_H,
        fill: 'transparent',
    });
    chart.append(overlay);
    attachLeafBrush(chart, overlay, leaves, slotW, shift, leafAttr, side, deps);

    panel.append(chart, groupChips(side, deps), minimap(side, deps));
    return panel;
}

// ---- aligned overlay panel ----

function describeLine(response: AlignedCompare): HTMLElement {
    const line = el('div', { class: 'compare-description' });
    for (const [text, role] of response.description.parts) {
        const color = role === 'upper' ? COLORS.upper
            : role === 'lower' ? COLORS.lower : COLORS.separator;
        line.append(el('span', { class: `part-${role}`, style: `color:${color}` }, text), ' ');
    }
    return line;
}

function alignedPanel(response: AlignedCompare, deps: HistogramViewDeps): HTMLElement {
    const state = deps.state;
    const spec = state.panels.upper;
    const { leaves, bands, total } = layoutSlots(response.slots);
    const panel = el('div', { class: 'histogram-panel panel-aligned' },
        describeLine(response),
        chainEditor('upper', deps),
    );
    if (total === 0) {
        panel.append(el('p', { class: 'placeholder' }, 'nothing to compare'));
        return panel;
    }

    const win = state.minimaps.upper;
    const contentW = PANEL_W / win.span;
    const slotW = contentW / total;
    const shift = win.start * contentW;
    const bandArea = (response.chain.length - 1) * BAND_H;
    const baseline = bandArea + BAR_AREA_H;
    const chart = svg('svg', {
        class: 'hierarchy-chart aligned-chart',
        width: PANEL_W,
        height: baseline + LABEL_H,
    });
    const body = svg('g', { transform: `translate(${-shift},0)` });
    chart.append(body);

    let maxH = 0;
    for (const leaf of leaves) {
        maxH = Math.max(maxH,
            heightOf(leaf.slot.upper, spec.scale),
            heightOf(leaf.slot.lower, spec.scale));
    }
    const factor = maxH > 0 ? (BAR_AREA_H - 4) / maxH : 0;

    for (const band of bands) {
        const y = (band.depth - 1) * BAND_H;
        body.append(svg('rect', {
            class: 'level-band',
            x: band.x * slotW + 1,
            y: y + 1,
            width: band.width * slotW - 2,
            height: BAND_H - 2,
            fill: '#ddd',
            opacity: 0.7,
        }));
        if (band.width * slotW > 24) {
            body.append(svg('text', {
                class: 'band-label',
                x: band.x * slotW + 4,
                y: y + BAND_H - 5,
                'font-size': 9,
            }, band.slot.key));
        }
    }

    for (const leaf of leaves) {
        const sides: { side: SlotSide; cls: string; fill: string }[] = [
            { side: leaf.slot.upper, cls: 'overlay-upper', fill: COLORS.upper },
            { side: leaf.slot.lower, cls: 'overlay-lower', fill: COLORS.lower },
        ];
        const drawn = sides
            .filter(s => !s.side.empty && s.side.measure > 0)
            .map(s => ({
                ...s,
                px: barPx(heightOf(s.side, spec.scale), s.side.measure, factor),
            }));
        // taller behind, shorter on top in solid fill
        drawn.sort((a, b) => b.px - a.px);
        const slotGroup = svg('g', { class: 'aligned-slot', 'data-key': leaf.slot.key });
        for (const entry of drawn) {
            slotGroup.append(svg('rect', {
                class: `overlay-bar ${entry.cls}`,
                'data-measure': entry.side.measure,
                x: leaf.x * slotW + 1,
                y: baseline - entry.px,
                width: Math.max(1, slotW - 2),
                height: entry.px,
                fill: entry.fill,
            }));
        }
        if (drawn.length === 0) {
            slotGroup.append(svg('rect', {
                class: 'overlay-empty',
                x: leaf.x * slotW + 1,
                y: baseline - 1,
                width: Math.max(1, slotW - 2),
                height: 1,
                fill: 'none',
                stroke: '#ccc',
            }));
        }
        slotGroup.append(svg('rect', {
            class: 'hit-area',
            x: leaf.x * slotW + 1 - HIT_PAD,
            y: bandArea - HIT_PAD,
            width: Math.max(1, slotW - 2) + 2 * HIT_PAD,
            height: BAR_AREA_H + 2 * HIT_PAD,
            fill: 'transparent',
            onpointerenter: (ev: Event) => {
                const me = ev as PointerEvent;
                const up = leaf.slot.upper;
                const low = leaf.slot.lower;
                deps.onTooltip(
                    `${leaf.slot.key}: ${up.empty ? 'none' : up.measure} vs ${low.empty ? 'none' : low.measure}`,
                    me.clientX, me.clientY);
            },
            onpointerleave: () => deps.onTooltip(null, 0, 0),
        }));
        body.append(slotGroup);
        if (slotW >= 16) {
            body.append(svg('text', {
                class: 'slot-label',
                x: leaf.x * slotW + 2,
                y: baseline + LABEL_H - 2,
                'font-size': 8,
            }, leaf.slot.key));
        }
    }

    panel.append(chart, groupChips('upper', deps), minimap('upper', deps));
    return panel;
}

// ---- view entry ----

export function renderHistogramView(
    container: HTMLElement,
    deps: HistogramViewDeps,
    data: HistogramViewData,
): void {
    clear(container);
    container.append(el('h2', {}, 'Histograms'), controls(deps));

    if (data.compare !== null) {
        if (data.compare.aligned) {
            container.append(alignedPanel(data.compare, deps));
        } else {
            container.append(
                hierarchyPanel('upper', data.compare.upper, deps),
                hierarchyPanel('lower', data.compare.lower, deps),
            );
        }
    } else if (data.single !== null) {
        container.append(hierarchyPanel(data.single.side, data.single.response, deps));
    } else {
        container.append(el('p', { class: 'placeholder' },
            'assign a set to the upper or lower side to see its histogram'));
    }

    if (data.error !== null) {
        container.append(el('div', { class: 'view-error' }, data.error));
    }
}
