// Wires the three views to the API client and the shared state. Every state
// change re-renders; histogram traffic is re-issued only when the request it
// would send actually changed, and stale responses are dropped by the
// client's per-key cancellation.

import { ApiError, Client, isAbort } from './client.js';
import { clear, el } from './dom.js';
import { HistogramViewData, renderHistogramView } from './histogram.js';
import { renderPublicationView } from './publications.js';
import { renderScholarView } from './scholars.js';
import { Side, ViewState } from './state.js';
import {
    CoauthorList,
    CompareResponse,
    HierarchyResponse,
    OperatorName,
    ScholarList,
    SetList,
} from './types.js';

const HELP_TEXT = [
    'Scholars: click a name to focus it and see coauthors. Click a coauthor ' +
    'or the select button to add them to the combination; click the operator ' +
    'chip to cycle and, or, not, ignore. The label line shows the name the ' +
    'set will get. Add set registers the combination.',
    'Publications: each registered set gets a year timeline. The upper and ' +
    'lower buttons pick the two sets to compare. Drag across years and ' +
    'release to register a copy of the set restricted to that span.',
    'Histograms: pick a chain of up to four attributes to partition the ' +
    'compared sets. Heights follow the selected scale. Lock keeps both ' +
    'chains identical, align overlays both sets slot by slot with the ' +
    'shorter bar drawn on top. Drag across year bars to group them; rename ' +
    'a group to ignore to drop it.',
];

function errorText(err: unknown): string {
    if (err instanceof ApiError) {
        return `${err.code}: ${err.message}`;
    }
    return String(err);
}

export class App {
    readonly state = new ViewState();
    private readonly client: Client;

    private scholars: ScholarList | null = null;
    private coauthors: CoauthorList | null = null;
    private sets: SetList | null = null;
    private compare: CompareResponse | null = null;
    private single: { side: Side; response: HierarchyResponse } | null = null;
    private errors: Record<'scholar' | 'publication' | 'histogram', string | null> = {
        scholar: null,
        publication: null,
        histogram: null,
    };
    private lastHistogramKey = '';

    private readonly scholarBox: HTMLElement;
    private readonly publicationBox: HTMLElement;
    private readonly histogramBox: HTMLElement;
    private readonly tooltip: HTMLElement;
    private readonly helpPanel: HTMLElement;

    constructor(root: HTMLElement, client: Client) {
        this.client = client;
        clear(root);
        this.tooltip = el('div', { class: 'tooltip', style: 'display:none' });
        this.helpPanel = el('div', { class: 'help-panel', style: 'display:none' },
            ...HELP_TEXT.map(t => el('p', {}, t)));
        const header = el('div', { class: 'app-header' },
            el('h1', {}, 'scholarslice'),
            el('button', {
                class: 'help-toggle',
                onclick: () => {
                    const hidden = this.helpPanel.style.display === 'none';
                    this.helpPanel.style.display = hidden ? 'block' : 'none';
                },
            }, '?'),
        );
        this.scholarBox = el('section', { id: 'scholar-view' });
        this.publicationBox = el('section', { id: 'publication-view' });
        this.histogramBox = el('section', { id: 'histogram-view' });
        root.append(header, this.helpPanel,
            el('div', { class: 'view-grid' },
                this.scholarBox,
                this.publicationBox,
                this.histogramBox),
            this.tooltip);
        this.state.onChange(() => {
            this.renderAll();
            void this.refreshHistogram();
        });
    }

    async start(): Promise<void> {
        this.renderAll();
        try {
            this.scholars = await this.client.scholars();
        } catch (err) {
            this.errors.scholar = errorText(err);
        }
        this.renderAll();
    }

    private onTooltip = (text: string | null, x: number, y: number): void => {
        if (text === null) {
            this.tooltip.style.display = 'none';
            return;
        }
        this.tooltip.textContent = text;
        this.tooltip.style.display = 'block';
        this.tooltip.style.left = `${x + 10}px`;
        this.tooltip.style.top = `${y + 10}px`;
    };

    private onFocus = (id: string): void => {
        this.state.focusId = id;
        this.renderAll();
        this.client.coauthors(id).then(res => {
            this.coauthors = res;
            this.errors.scholar = null;
            this.renderAll();
        }).catch(err => {
            if (!isAbort(err)) {
                this.errors.scholar = errorText(err);
                this.renderAll();
            }
        });
    };

    private onCreate = (labels: Record<string, OperatorName>): void => {
        this.client.createSet(labels).then(async () => {
            this.errors.scholar = null;
            this.state.clearSelections();
            await this.refreshSets();
        }).catch(err => {
            this.errors.scholar = errorText(err);
            this.renderAll();
        });
    };

    private onFilter = (handle: string, fromYear: number, toYear: number): void => {
        this.client.filterYears(handle, fromYear, toYear).then(async () => {
            this.errors.publication = null;
            await this.refreshSets();
        }).catch(err => {
            this.errors.publication = errorText(err);
            this.renderAll();
        });
    };

    private onDelete = (handle: string): void => {
        this.client.deleteSet(handle).then(async () => {
            this.errors.publication = null;
            this.state.dropRoles(handle);
            await this.refreshSets();
        }).catch(err => {
            this.errors.publication = errorText(err);
            this.renderAll();
        });
    };

    private onAssign = (handle: string, side: Side): void => {
        this.state.assignRole(handle, side);
    };

    private async refreshSets(): Promise<void> {
        try {
            this.sets = await this.client.sets();
            this.errors.publication = null;
        } catch (err) {
            this.errors.publication = errorText(err);
        }
        this.renderAll();
    }

    private async refreshHistogram(): Promise<void> {
        const req = this.state.compareRequest();
        if (req !== null) {
            const key = 'compare:' + JSON.stringify(req);
            if (key === this.lastHistogramKey) {
                return;
            }
            this.lastHistogramKey = key;
            try {
                this.compare = await this.client.compare(req);
                this.single = null;
                this.errors.histogram = null;
            } catch (err) {
                if (isAbort(err)) {
                    return;
                }
                this.errors.histogram = errorText(err);
            }
            this.renderAll();
            return;
        }
        const side: Side | null = this.state.roles.upper !== null ? 'upper'
            : this.state.roles.lower !== null ? 'lower' : null;
        if (side === null) {
            this.compare = null;
            this.single = null;
            this.lastHistogramKey = '';
            this.renderAll();
            return;
        }
        const handle = this.state.roles[side];
        const hreq = this.state.hierarchyRequest(side);
        const key = `single:${side}:${handle}:` + JSON.stringify(hreq);
        if (key === this.lastHistogramKey) {
            return;
        }
        this.lastHistogramKey = key;
        try {
            const response = await this.client.hierarchy(handle as string, hreq);
            this.single = { side, response };
            this.compare = null;
            this.errors.histogram = null;
        } catch (err) {
            if (isAbort(err)) {
                return;
            }
            this.errors.histogram = errorText(err);
        }
        this.renderAll();
    }

    renderAll(): void {
        renderScholarView(this.scholarBox, {
            state: this.state,
            onFocus: this.onFocus,
            onCreate: this.onCreate,
            onTooltip: this.onTooltip,
        }, {
            scholars: this.scholars,
            coauthors: this.coauthors,
            error: this.errors.scholar,
        });
        renderPublicationView(this.publicationBox, {
            state: this.state,
            onFilter: this.onFilter,
            onDelete: this.onDelete,
            onAssign: this.onAssign,
        }, {
            sets: this.sets,
            error: this.errors.publication,
        });
        const data: HistogramViewData = {
            compare: this.compare,
            single: this.single,
            error: this.errors.histogram,
        };
        renderHistogramView(this.histogramBox, {
            state: this.state,
            onTooltip: this.onTooltip,
        }, data);
    }
}

export function boot(root: HTMLElement, base = ''): App {
    const app = new App(root, new Client(base));
    void app.start();
    return app;
}

const mount = typeof document !== 'undefined' ? document.getElementById('app') : null;
if (mount !== null) {
    boot(mount);
}
