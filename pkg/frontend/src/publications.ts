// Publication view: one timeline per registered set, colored by its role in
// the comparison. Dragging across a timeline picks a year span; releasing
// registers a new set restricted to that span. A drag that never leaves its
// starting year is treated as a click and does nothing.

import { clear, el, roleColor, svg } from './dom.js';
import { Side, ViewState } from './state.js';
import { SetList, SetSummary } from './types.js';

const SLOT_W = 14;
const TIMELINE_H = 48;
const LABEL_H = 14;

export interface PublicationViewDeps {
    state: ViewState;
    onFilter: (handle: string, fromYear: number, toYear: number) => void;
    onDelete: (handle: string) => void;
    onAssign: (handle: string, side: Side) => void;
}

export interface PublicationViewData {
    sets: SetList | null;
    error: string | null;
}

interface Span {
    years: number[];
    counts: Record<string, number>;
}

function yearSpan(sets: SetSummary[]): number[] {
    let lo = Infinity;
    let hi = -Infinity;
    for (const s of sets) {
        for (const key of Object.keys(s.timeline)) {
            const y = Number(key);
            if (!Number.isFinite(y)) {
                continue; // papers without a year get their own slot
            }
            if (y < lo) lo = y;
            if (y > hi) hi = y;
        }
    }
    if (lo > hi) {
        return [];
    }
    const years: number[] = [];
    for (let y = lo; y <= hi; y++) {
        years.push(y);
    }
    return years;
}

function timeline(
    set: SetSummary,
    years: number[],
    maxCount: number,
    deps: PublicationViewDeps,
): SVGElement {
    const state = deps.state;
    const unknown = set.timeline['Unknown'] ?? 0;
    const width = years.length * SLOT_W + (unknown > 0 ? SLOT_W + 6 : 0);
    const chart = svg('svg', {
        class: 'timeline',
        width,
        height: TIMELINE_H + LABEL_H,
        'data-handle': set.handle,
    });
    const role = state.roles.upper === set.handle ? 'upper'
        : state.roles.lower === set.handle ? 'lower' : null;
    const fill = roleColor(role);

    years.forEach((year, i) => {
        const count = set.timeline[String(year)] ?? 0;
        if (count > 0) {
            const h = (count / maxCount) * TIMELINE_H;
            chart.append(svg('rect', {
                class: 'timeline-bar',
                'data-year': year,
                x: i * SLOT_W + 1,
                y: TIMELINE_H - h,
                width: SLOT_W - 2,
                height: h,
                fill,
            }));
        }
    });
    if (unknown > 0) {
        const h = (unknown / maxCount) * TIMELINE_H;
        chart.append(
            svg('rect', {
                class: 'timeline-bar timeline-unknown',
                'data-year': 'Unknown',
                x: years.length * SLOT_W + 7,
                y: TIMELINE_H - h,
                width: SLOT_W - 2,
                height: h,
                fill,
                opacity: 0.5,
            }),
            svg('text', {
                class: 'axis-year',
                x: years.length * SLOT_W + 5,
                y: TIMELINE_H + LABEL_H - 3,
                'font-size': 9,
            }, '?'),
        );
    }
    chart.append(
        svg('text', { class: 'axis-year', x: 0, y: TIMELINE_H + LABEL_H - 3, 'font-size': 9 },
            String(years[0])),
        svg('text', {
            class: 'axis-year',
            x: width - 4 * 6, y: TIMELINE_H + LABEL_H - 3, 'font-size': 9,
        }, String(years[years.length - 1])),
    );

    // year brushing; coordinates come from the fixed slot width, not layout
    const brush = svg('rect', {
        class: 'brush-overlay',
        x: 0, y: 0, width, height: TIMELINE_H,
        fill: 'transparent',
    });
    let anchor: number | null = null;
    let highlight: SVGElement | null = null;
    const yearAt = (ev: PointerEvent): number => {
        const left = (chart as unknown as Element).getBoundingClientRect().left;
        const slot = Math.min(years.length - 1, Math.max(0, Math.floor((ev.clientX - left) / SLOT_W)));
        return years[slot];
    };
    brush.addEventListener('pointerdown', ev => {
        anchor = yearAt(ev as PointerEvent);
    });
    brush.addEventListener('pointermove', ev => {
        if (anchor === null) {
            return;
        }
        const current = yearAt(ev as PointerEvent);
        const lo = Math.min(anchor, current);
        const hi = Math.max(anchor, current);
        if (highlight) {
            highlight.remove();
        }
        highlight = svg('rect', {
            class: 'brush-extent',
            x: years.indexOf(lo) * SLOT_W,
            y: 0,
            width: (hi - lo + 1) * SLOT_W,
            height: TIMELINE_H,
            fill: fill,
            opacity: 0.25,
        });
        chart.insertBefore(highlight, brush);
    });
    brush.addEventListener('pointerup', ev => {
        if (anchor === null) {
            return;
        }
        const current = yearAt(ev as PointerEvent);
        const lo = Math.min(anchor, current);
        const hi = Math.max(anchor, current);
        anchor = null;
        if (highlight) {
            highlight.remove();
            highlight = null;
        }
        if (lo < hi) {
            deps.onFilter(set.handle, lo, hi);
        }
    });
    chart.append(brush);
    return chart;
}

function setRow(
    set: SetSummary,
    years: number[],
    maxCount: number,
    deps: PublicationViewDeps,
): HTMLElement {
    const state = deps.state;
    const role = state.roles.upper === set.handle ? 'upper'
        : state.roles.lower === set.handle ? 'lower' : null;
    const header = el('div', { class: 'set-header' },
        el('span', { class: 'set-label', style: `color:${roleColor(role)}` }, set.label),
        el('span', { class: 'set-metrics' },
            `${set.paper_count} papers, ${set.total_citations} citations, h-index ${set.h_index}`),
        el('button', {
            class: role === 'upper' ? 'assign-upper active' : 'assign-upper',
            onclick: () => deps.onAssign(set.handle, 'upper'),
        }, 'upper'),
        el('button', {
            class: role === 'lower' ? 'assign-lower active' : 'assign-lower',
            onclick: () => deps.onAssign(set.handle, 'lower'),
        }, 'lower'),
        el('button', { class: 'delete-set', onclick: () => deps.onDelete(set.handle) }, 'x'),
    );
    return el('div', { class: 'set-row', 'data-handle': set.handle },
        header,
        timeline(set, years, maxCount, deps),
    );
}

export function renderPublicationView(
    container: HTMLElement,
    deps: PublicationViewDeps,
    data: PublicationViewData,
): void {
    clear(container);
    container.append(el('h2', {}, 'Publications'));
    if (data.sets === null || data.sets.sets.length === 0) {
        container.append(el('p', { class: 'placeholder' }, 'no sets registered yet'));
    } else {
        const years = yearSpan(data.sets.sets);
        let maxCount = 1;
        for (const s of data.sets.sets) {
            for (const v of Object.values(s.timeline)) {
                if (v > maxCount) maxCount = v;
            }
        }
        for (const set of data.sets.sets) {
            container.append(setRow(set, years, maxCount, deps));
        }
    }
    if (data.error !== null) {
        container.append(el('div', { class: 'view-error' }, data.error));
    }
}
