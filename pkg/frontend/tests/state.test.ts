import { describe, expect, it } from 'vitest';

import { ViewState } from '../src/state.js';

function withRoles(): ViewState {
    const state = new ViewState();
    state.assignRole('set-1', 'upper');
    state.assignRole('set-2', 'lower');
    return state;
}

describe('lock invariant', () => {
    it('mirrors every panel edit onto the other side while locked', () => {
        const state = withRoles();
        expect(state.lock).toBe(true);
        state.editPanel('upper', s => { s.chain = ['P.CcfRank', 'P.Year']; });
        expect(state.panels.lower.chain).toEqual(['P.CcfRank', 'P.Year']);
        state.editPanel('lower', s => { s.measure = 'citations'; });
        expect(state.panels.upper.measure).toBe('citations');
    });

    it('sends one shared request while locked', () => {
        const state = withRoles();
        state.editPanel('upper', s => { s.chain = ['P.Year', 'P.Venue']; });
        const req = state.compareRequest();
        expect(req).not.toBeNull();
        expect(req!.lock).toBe(true);
        expect(req!.request!.chain).toEqual(['P.Year', 'P.Venue']);
        expect(req!.upper_request).toBeUndefined();
        expect(req!.lower_request).toBeUndefined();
    });

    it('lets chains diverge once unlocked, then snaps them back on relock', () => {
        const state = withRoles();
        state.setLock(false);
        state.editPanel('upper', s => { s.chain = ['P.CcfRank']; });
        expect(state.panels.lower.chain).toEqual(['P.Year']);
        const req = state.compareRequest()!;
        expect(req.lock).toBe(false);
        expect(req.upper_request!.chain).toEqual(['P.CcfRank']);
        expect(req.lower_request!.chain).toEqual(['P.Year']);
        state.setLock(true);
        expect(state.panels.lower.chain).toEqual(['P.CcfRank']);
    });
});

describe('align invariant', () => {
    it('forces lock on and keeps it on', () => {
        const state = withRoles();
        state.setLock(false);
        state.editPanel('lower', s => { s.chain = ['P.Venue']; });
        state.setAlign(true);
        expect(state.lock).toBe(true);
        expect(state.panels.lower.chain).toEqual(state.panels.upper.chain);
        state.setLock(false);
        expect(state.lock).toBe(true);
    });

    it('carries the offset only for a leading year attribute', () => {
        const state = withRoles();
        state.setAlign(true);
        state.setOffset(3);
        expect(state.compareRequest()!.offset).toBe(3);
        state.editPanel('upper', s => { s.chain = ['P.Venue']; });
        expect(state.compareRequest()!.offset).toBeUndefined();
    });

    it('clears the offset when alignment is switched off', () => {
        const state = withRoles();
        state.setAlign(true);
        state.setOffset(-2);
        state.setAlign(false);
        expect(state.offset).toBe(0);
    });
});

describe('roles', () => {
    it('moves a role between handles and never duplicates it', () => {
        const state = new ViewState();
        state.assignRole('set-1', 'upper');
        state.assignRole('set-2', 'upper');
        expect(state.roles.upper).toBe('set-2');
        state.assignRole('set-2', 'lower');
        expect(state.roles.upper).toBeNull();
        expect(state.roles.lower).toBe('set-2');
    });

    it('builds no compare request until both sides are assigned', () => {
        const state = new ViewState();
        expect(state.compareRequest()).toBeNull();
        state.assignRole('set-1', 'upper');
        expect(state.compareRequest()).toBeNull();
        state.assignRole('set-2', 'lower');
        expect(state.compareRequest()).not.toBeNull();
    });
});

describe('minimap window', () => {
    it('clamps start and span into the unit interval', () => {
        const state = new ViewState();
        state.setMinimap('upper', { start: 0.9, span: 0.5 });
        expect(state.minimaps.upper).toEqual({ start: 0.5, span: 0.5 });
        state.setMinimap('upper', { start: -1, span: 2 });
        expect(state.minimaps.upper).toEqual({ start: 0, span: 1 });
        state.setMinimap('upper', { start: 0.2, span: 0.001 });
        expect(state.minimaps.upper.span).toBeGreaterThan(0);
    });

    it('links both windows under lock and align', () => {
        const state = new ViewState();
        state.setMinimap('upper', { start: 0.25, span: 0.5 });
        expect(state.minimaps.lower).toEqual({ start: 0.25, span: 0.5 });
        state.setLock(false);
        state.setMinimap('lower', { start: 0, span: 1 });
        expect(state.minimaps.upper).toEqual({ start: 0.25, span: 0.5 });
        state.setAlign(true);
        state.setMinimap('lower', { start: 0.1, span: 0.2 });
        expect(state.minimaps.upper).toEqual({ start: 0.1, span: 0.2 });
    });
});

describe('group editing', () => {
    it('collects brushed years into a request group', () => {
        const state = withRoles();
        state.addYearGroup('upper', 'P.Year', 2005, 2008);
        const req = state.compareRequest()!;
        expect(req.request!.groups).toEqual([{
            attribute: 'P.Year',
            groups: [{ label: '2005-2008', values: [2005, 2006, 2007, 2008] }],
            ignored: [],
        }]);
    });

    it('renames and removes groups, and tracks ignored bars', () => {
        const state = withRoles();
        state.addYearGroup('upper', 'P.Year', 2000, 2001);
        state.renameGroup('upper', 'P.Year', '2000-2001', 'early');
        expect(state.panels.upper.groups[0].groups[0].label).toBe('early');
        state.ignoreBar('upper', 'P.Year', '1999');
        expect(state.panels.upper.groups[0].ignored).toEqual(['1999']);
        state.removeGroup('upper', 'P.Year', 'early');
        expect(state.panels.upper.groups[0].groups).toEqual([]);
        const req = state.hierarchyRequest('upper');
        expect(req.groups).toEqual([{ attribute: 'P.Year', groups: [], ignored: ['1999'] }]);
    });

    it('drops groups for attributes no longer on the chain from requests', () => {
        const state = withRoles();
        state.addYearGroup('upper', 'P.Year', 2000, 2002);
        state.editPanel('upper', s => { s.chain = ['P.Venue']; });
        expect(state.hierarchyRequest('upper').groups).toBeUndefined();
    });
});
