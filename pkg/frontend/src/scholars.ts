// Scholar view: pick a focus scholar, see who they publish with, and build a
// combination by toggling an operator per selected scholar. The label line
// previews exactly what the server will call the set.

import { formatLabel, hasPositive, nextOperator } from './label.js';
import { COLORS, clear, el, svg } from './dom.js';
import { ViewState } from './state.js';
import { Coauthor, CoauthorList, OperatorName, Scholar, ScholarList } from './types.js';

const BAR_MAX = 180;
const BAR_H = 12;
const HIT_PAD = 6;

export interface ScholarViewDeps {
    state: ViewState;
    onFocus: (id: string) => void;
    onCreate: (labels: Record<string, OperatorName>) => void;
    onTooltip: (text: string | null, x: number, y: number) => void;
}

export interface ScholarViewData {
    scholars: ScholarList | null;
    coauthors: CoauthorList | null;
    error: string | null;
}

function coauthorRow(co: Coauthor, maxPapers: number, deps: ScholarViewDeps): HTMLElement {
    const totalW = maxPapers > 0 ? (co.total_papers / maxPapers) * BAR_MAX : 0;
    const sharedW = maxPapers > 0 ? (co.co_papers / maxPapers) * BAR_MAX : 0;
    const chart = svg('svg', {
        class: 'coauthor-bars',
        width: BAR_MAX,
        height: BAR_H,
    });
    chart.append(
        svg('rect', {
            class: 'bar-total',
            x: 0, y: 0, width: totalW, height: BAR_H,
            fill: COLORS.coTotal,
        }),
        svg('rect', {
            class: 'bar-shared',
            x: 0, y: 0, width: sharedW, height: BAR_H,
            fill: COLORS.coShared,
        }),
        svg('rect', {
            class: 'hit-area',
            x: -HIT_PAD, y: -HIT_PAD,
            width: totalW + 2 * HIT_PAD, height: BAR_H + 2 * HIT_PAD,
            fill: 'transparent',
            onpointerenter: (ev: Event) => {
                const me = ev as PointerEvent;
                deps.onTooltip(`${co.name}: ${co.co_papers} shared of ${co.total_papers}`, me.clientX, me.clientY);
            },
            onpointerleave: () => deps.onTooltip(null, 0, 0),
        }),
    );
    return el('div', { class: 'coauthor-row', 'data-id': co.id },
        el('button', {
            class: 'coauthor-name',
            onclick: () => deps.state.addSelection({ id: co.id, name: co.name, paper_count: co.total_papers }),
        }, co.name),
        chart,
        el('span', { class: 'coauthor-counts' }, `${co.co_papers} / ${co.total_papers}`),
    );
}

function selectionChips(deps: ScholarViewDeps): HTMLElement {
    const { state } = deps;
    const chips = state.selections.map(sel =>
        el('span', { class: 'selection-chip', 'data-id': sel.id },
            el('span', { class: 'selection-name' }, sel.name),
            el('button', {
                class: `op-chip op-${sel.op}`,
                title: 'cycle operator',
                onclick: () => state.cycleOperator(sel.id, nextOperator),
            }, sel.op),
        ),
    );
    return el('div', { class: 'selection-row' }, ...chips);
}

export function renderScholarView(
    container: HTMLElement,
    deps: ScholarViewDeps,
    data: ScholarViewData,
): void {
    clear(container);
    const { state } = deps;
    container.append(el('h2', {}, 'Scholars'));

    if (data.scholars === null) {
        container.append(el('p', { class: 'placeholder' }, 'loading scholars'));
        return;
    }

    const list = el('div', { class: 'scholar-list' });
    for (const sch of data.scholars.scholars) {
        const isFocus = sch.id === state.focusId;
        list.append(el('button', {
            class: isFocus ? 'scholar-row focused' : 'scholar-row',
            'data-id': sch.id,
            onclick: () => deps.onFocus(sch.id),
        }, `${sch.name} (${sch.paper_count})`));
    }
    container.append(list);

    if (data.coauthors !== null) {
        const focus = data.coauthors.focus;
        container.append(el('div', { class: 'focus-line' },
            el('span', {}, `coauthors of ${focus.name}`),
            el('button', {
                class: 'add-focus',
                onclick: () => state.addSelection(focus as Scholar),
            }, 'select'),
        ));
        const maxPapers = Math.max(
            focus.paper_count,
            ...data.coauthors.coauthors.map(c => c.total_papers),
        );
        const rows = el('div', { class: 'coauthor-list' });
        for (const co of data.coauthors.coauthors) {
            rows.append(coauthorRow(co, maxPapers, deps));
        }
        container.append(rows);
    }

    if (state.selections.length > 0) {
        container.append(selectionChips(deps));
        const label = formatLabel(state.selections);
        container.append(el('div', { class: 'label-preview' }, label));
        const labels: Record<string, OperatorName> = {};
        for (const sel of state.selections) {
            labels[sel.id] = sel.op;
        }
        container.append(el('div', { class: 'combine-actions' },
            el('button', {
                class: 'create-set',
                disabled: !hasPositive(state.selections),
                onclick: () => deps.onCreate(labels),
            }, 'add set'),
            el('button', { class: 'clear-selection', onclick: () => state.clearSelections() }, 'clear'),
        ));
    }

    if (data.error !== null) {
        container.append(el('div', { class: 'view-error' }, data.error));
    }
}
