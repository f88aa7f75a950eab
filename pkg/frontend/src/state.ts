// Shared view state. Everything the three views need to agree on lives here,
// and the two invariants the histogram view depends on are enforced at the
// mutation sites rather than checked in the render paths:
//
//   lock on    => the lower panel's request spec is a mirror of the upper's,
//                 so a locked comparison always sends one shared request
//   align on   => lock is forced on (aligned slots only make sense when both
//                 sides answer the identical request)
//
// The state never holds derived metrics. Counts, heights and labels shown in
// the views come straight from API responses.

import { Selection } from './label.js';
import {
    CompareRequest,
    GroupBody,
    GroupSpecBody,
    HierarchyRequest,
    Measure,
    Mode,
    ScaleKind,
    Scholar,
    isYearAttr,
} from './types.js';

export type Side = 'upper' | 'lower';

export interface PanelSpec {
    chain: string[];
    mode: Mode;
    measure: Measure;
    groups: GroupSpecBody[];
    scale: ScaleKind;
}

export interface MinimapWindow {
    start: number;
    span: number;
}

const MIN_SPAN = 0.05;

function clampWindow(win: MinimapWindow): MinimapWindow {
    const span = Math.min(1, Math.max(MIN_SPAN, win.span));
    const start = Math.min(1 - span, Math.max(0, win.start));
    return { start, span };
}

function freshPanel(): PanelSpec {
    return { chain: ['P.Year'], mode: 'papers', measure: 'papers', groups: [], scale: 'linear' };
}

function clonePanel(spec: PanelSpec): PanelSpec {
    return JSON.parse(JSON.stringify(spec)) as PanelSpec;
}

export class ViewState {
    focusId: string | null = null;
    selections: Selection[] = [];
    roles: { upper: string | null; lower: string | null } = { upper: null, lower: null };

    lock = true;
    align = false;
    offset = 0;
    panels: { upper: PanelSpec; lower: PanelSpec } = { upper: freshPanel(), lower: freshPanel() };
    minimaps: { upper: MinimapWindow; lower: MinimapWindow } = {
        upper: { start: 0, span: 1 },
        lower: { start: 0, span: 1 },
    };

    private listeners: (() => void)[] = [];

    onChange(fn: () => void): void {
        this.listeners.push(fn);
    }

    notify(): void {
        for (const fn of this.listeners) {
            fn();
        }
    }

    // ---- scholar selection ----

    addSelection(scholar: Scholar): void {
        if (this.selections.some(s => s.id === scholar.id)) {
            return;
        }
        this.selections.push({ id: scholar.id, name: scholar.name, op: 'and' });
        this.notify();
    }

    cycleOperator(id: string, next: (op: Selection['op']) => Selection['op']): void {
        const sel = this.selections.find(s => s.id === id);
        if (sel) {
            sel.op = next(sel.op);
            this.notify();
        }
    }

    clearSelections(): void {
        this.selections = [];
        this.notify();
    }

    // ---- roles ----

    /** Give `handle` a side, displacing whichever set held it before. */
    assignRole(handle: string, side: Side): void {
        const other: Side = side === 'upper' ? 'lower' : 'upper';
        if (this.roles[other] === handle) {
            this.roles[other] = null;
        }
        this.roles[side] = handle;
        this.notify();
    }

    dropRoles(handle: string): void {
        if (this.roles.upper === handle) this.roles.upper = null;
        if (this.roles.lower === handle) this.roles.lower = null;
        this.notify();
    }

    // ---- histogram panel specs ----

    /** Mutate one panel spec; under lock every edit lands on both sides. */
    editPanel(side: Side, edit: (spec: PanelSpec) => void): void {
        edit(this.panels[side]);
        if (this.lock) {
            const other: Side = side === 'upper' ? 'lower' : 'upper';
            this.panels[other] = clonePanel(this.panels[side]);
        }
        this.notify();
    }

    setLock(on: boolean): void {
        if (!on && this.align) {
            return; // aligned views stay locked
        }
        this.lock = on;
        if (on) {
            this.panels.lower = clonePanel(this.panels.upper);
            this.minimaps.lower = { ...this.minimaps.upper };
        }
        this.notify();
    }

    setAlign(on: boolean): void {
        this.align = on;
        if (on && !this.lock) {
            this.lock = true;
            this.panels.lower = clonePanel(this.panels.upper);
            this.minimaps.lower = { ...this.minimaps.upper };
        }
        if (!on) {
            this.offset = 0;
        }
        this.notify();
    }

    setOffset(offset: number): void {
        this.offset = offset;
        this.notify();
    }

    setMinimap(side: Side, win: MinimapWindow): void {
        const clamped = clampWindow(win);
        this.minimaps[side] = clamped;
        if (this.lock || this.align) {
            const other: Side = side === 'upper' ? 'lower' : 'upper';
            this.minimaps[other] = { ...clamped };
        }
        this.notify();
    }

    // ---- group editing helpers ----

    addYearGroup(side: Side, attr: string, fromYear: number, toYear: number): void {
        if (!isYearAttr(attr)) {
            return;
        }
        const values: number[] = [];
        for (let y = fromYear; y <= toYear; y++) {
            values.push(y);
        }
        const group: GroupBody = { label: `${fromYear}-${toYear}`, values };
        this.editPanel(side, spec => {
            const existing = spec.groups.find(g => g.attribute === attr);
            if (existing) {
                existing.groups.push(group);
            } else {
                spec.groups.push({ attribute: attr, groups: [group], ignored: [] });
            }
        });
    }

    renameGroup(side: Side, attr: string, oldLabel: string, newLabel: string): void {
        this.editPanel(side, spec => {
            const entry = spec.groups.find(g => g.attribute === attr);
            const group = entry?.groups.find(g => g.label === oldLabel);
            if (group) {
                group.label = newLabel;
            }
        });
    }

    removeGroup(side: Side, attr: string, label: string): void {
        this.editPanel(side, spec => {
            const entry = spec.groups.find(g => g.attribute === attr);
            if (entry) {
                entry.groups = entry.groups.filter(g => g.label !== label);
            }
        });
    }

    ignoreBar(side: Side, attr: string, label: string): void {
        this.editPanel(side, spec => {
            const entry = spec.groups.find(g => g.attribute === attr);
            if (entry) {
                if (!entry.ignored.includes(label)) {
                    entry.ignored.push(label);
                }
            } else {
                spec.groups.push({ attribute: attr, groups: [], ignored: [label] });
            }
        });
    }

    // ---- request assembly ----

    hierarchyRequest(side: Side): HierarchyRequest {
        const spec = this.panels[side];
        const groups = spec.groups.filter(
            g => spec.chain.includes(g.attribute) && (g.groups.length > 0 || g.ignored.length > 0),
        );
        const req: HierarchyRequest = {
            chain: [...spec.chain],
            mode: spec.mode,
            measure: spec.measure,
        };
        if (groups.length > 0) {
            req.groups = JSON.parse(JSON.stringify(groups));
        }
        return req;
    }

    /**
     * Build the compare request for the current roles. Locked comparisons
     * carry one shared request; unlocked ones carry a request per side.
     */
    compareRequest(): CompareRequest | null {
        if (this.roles.upper === null || this.roles.lower === null) {
            return null;
        }
        const req: CompareRequest = {
            upper: this.roles.upper,
            lower: this.roles.lower,
            lock: this.lock,
            align: this.align,
        };
        if (this.align && isYearAttr(this.panels.upper.chain[0] ?? '')) {
            req.offset = this.offset;
        }
        if (this.lock) {
            req.request = this.hierarchyRequest('upper');
        } else {
            req.upper_request = this.hierarchyRequest('upper');
            req.lower_request = this.hierarchyRequest('lower');
        }
        return req;
    }
}
