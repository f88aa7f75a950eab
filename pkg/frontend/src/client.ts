// Thin typed wrapper over fetch. Histogram traffic is keyed so that a burst
// of chain edits cancels the requests it obsoletes: only the latest response
// per key ever resolves, the rest reject with AbortError.

import {
    CoauthorList,
    CompareRequest,
    CompareResponse,
    HierarchyRequest,
    HierarchyResponse,
    OperatorName,
    ScholarList,
    SetList,
    SetSummary,
} from './types.js';

export class ApiError extends Error {
    readonly code: string;
    readonly status: number;

    constructor(status: number, code: string, message: string) {
        super(message);
        this.code = code;
        this.status = status;
    }
}

export function isAbort(err: unknown): boolean {
    return err instanceof DOMException && err.name === 'AbortError';
}

async function parseFailure(res: Response): Promise<ApiError> {
    let code = 'HTTP_' + res.status;
    let message = res.statusText;
    try {
        const body = await res.json();
        if (body && body.error) {
            code = body.error.code;
            message = body.error.message;
        }
    } catch {
        // non-JSON failure body, keep the status line
    }
    return new ApiError(res.status, code, message);
}

export class Client {
    private readonly base: string;
    private readonly pending = new Map<string, AbortController>();

    constructor(base = '') {
        this.base = base.replace(/\/$/, '');
    }

    private async request<T>(method: string, path: string, body?: unknown, key?: string): Promise<T> {
        const init: RequestInit = { method, headers: {} };
        if (body !== undefined) {
            init.headers = { 'content-type': 'application/json' };
            init.body = JSON.stringify(body);
        }
        if (key !== undefined) {
            this.pending.get(key)?.abort();
            const controller = new AbortController();
            this.pending.set(key, controller);
            init.signal = controller.signal;
        }
        const res = await fetch(this.base + path, init);
        if (!res.ok) {
            throw await parseFailure(res);
        }
        if (res.status === 204) {
            return undefined as T;
        }
        return (await res.json()) as T;
    }

    scholars(): Promise<ScholarList> {
        return this.request('GET', '/scholars');
    }

    coauthors(scholarId: string): Promise<CoauthorList> {
        return this.request('GET', `/scholars/${scholarId}/coauthors`, undefined, 'coauthors');
    }

    sets(): Promise<SetList> {
        return this.request('GET', '/sets');
    }

    createSet(labels: Record<string, OperatorName>): Promise<SetSummary> {
        return this.request('POST', '/sets', { labels });
    }

    deleteSet(handle: string): Promise<void> {
        return this.request('DELETE', `/sets/${handle}`);
    }

    filterYears(handle: string, fromYear: number, toYear: number): Promise<SetSummary> {
        return this.request('POST', `/sets/${handle}/filter-years`, {
            from_year: fromYear,
            to_year: toYear,
        });
    }

    hierarchy(handle: string, req: HierarchyRequest, key = 'hierarchy'): Promise<HierarchyResponse> {
        return this.request('POST', `/sets/${handle}/hierarchy`, req, key);
    }

    compare(req: CompareRequest): Promise<CompareResponse> {
        return this.request('POST', '/compare', req, 'compare');
    }
}
