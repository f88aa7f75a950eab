// Client-side preview of combination labels. The server's label on a created
// set is authoritative; this mirrors its grammar so the scholar view can show
// the label live while operators are being toggled, before any request is
// sent.
//
//   and scholars        joined with ' + '
//   or scholars         joined with ' | ', parenthesized when ands exist
//   not scholars        appended as ' - name'
//   ignore scholars     left out entirely
//
// Names appear in the order the scholars were selected.

import { OperatorName } from './types.js';

export interface Selection {
    id: string;
    name: string;
    op: OperatorName;
}

export function formatLabel(selections: Selection[]): string {
    const ands = selections.filter(s => s.op === 'and').map(s => s.name);
    const ors = selections.filter(s => s.op === 'or').map(s => s.name);
    const nots = selections.filter(s => s.op === 'not').map(s => s.name);

    let out = ands.join(' + ');
    if (ors.length > 0) {
        const orPart = ors.join(' | ');
        out = out === '' ? orPart : `${out} + (${orPart})`;
    }
    for (const name of nots) {
        out += ` - ${name}`;
    }
    return out;
}

/** A combination needs at least one and/or scholar to describe a set. */
export function hasPositive(selections: Selection[]): boolean {
    return selections.some(s => s.op === 'and' || s.op === 'or');
}

const CYCLE: OperatorName[] = ['and', 'or', 'not', 'ignore'];

export function nextOperator(op: OperatorName): OperatorName {
    return CYCLE[(CYCLE.indexOf(op) + 1) % CYCLE.length];
}
