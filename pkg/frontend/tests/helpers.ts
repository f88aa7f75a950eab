// Mock fetch over the captured API snapshots. Routes are matched on
// "METHOD path"; each handler sees the parsed body and may return a status
// other than 200. Unmatched requests fail the test loudly.

import snapshotsJson from './fixtures/snapshots.json';

export const snapshots = snapshotsJson as Record<string, any>;

export interface RecordedCall {
    method: string;
    path: string;
    body: any;
}

export type RouteHandler = (body: any) => { status?: number; body: any } | any;

export interface MockServer {
    calls: RecordedCall[];
    route(method: string, path: string, handler: RouteHandler): void;
    install(): void;
}

export function mockServer(): MockServer {
    const routes = new Map<string, RouteHandler>();
    const calls: RecordedCall[] = [];

    const abortError = () => new DOMException('aborted', 'AbortError');

    const raceAbort = <T>(value: Promise<T> | T, signal?: AbortSignal | null): Promise<T> => {
        if (!signal) {
            return Promise.resolve(value);
        }
        if (signal.aborted) {
            return Promise.reject(abortError());
        }
        return new Promise<T>((resolve, reject) => {
            signal.addEventListener('abort', () => reject(abortError()), { once: true });
            Promise.resolve(value).then(resolve, reject);
        });
    };

    const fetchImpl = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
        const url = String(input);
        const path = url.replace(/^https?:\/\/[^/]+/, '');
        const method = (init?.method ?? 'GET').toUpperCase();
        const body = init?.body ? JSON.parse(String(init.body)) : undefined;
        calls.push({ method, path, body });

        const handler = routes.get(`${method} ${path}`);
        if (!handler) {
            throw new Error(`no mock route for ${method} ${path}`);
        }
        const raw = await raceAbort(handler(body), init?.signal);
        const result = raw && typeof raw === 'object' && 'status' in raw && 'body' in raw
            ? raw as { status: number; body: any }
            : { status: 200, body: raw };
        if (result.status === 204) {
            return new Response(null, { status: 204 });
        }
        return new Response(JSON.stringify(result.body), {
            status: result.status,
            headers: { 'content-type': 'application/json' },
        });
    };

    return {
        calls,
        route(method: string, path: string, handler: RouteHandler): void {
            routes.set(`${method.toUpperCase()} ${path}`, handler);
        },
        install(): void {
            (globalThis as any).fetch = fetchImpl;
        },
    };
}

/** Every maximal digit run anywhere in a JSON payload, including in strings. */
export function numbersIn(payload: unknown): Set<string> {
    const out = new Set<string>();
    for (const m of JSON.stringify(payload).matchAll(/\d+/g)) {
        out.add(m[0]);
    }
    return out;
}

/** Digit runs rendered as visible text, taken per text node so that numbers
 * in adjacent elements never merge. */
export function renderedNumbers(node: Element): string[] {
    const walker = node.ownerDocument.createTreeWalker(node, NodeFilter.SHOW_TEXT);
    const out: string[] = [];
    let current: Node | null;
    while ((current = walker.nextNode())) {
        for (const m of (current.textContent ?? '').matchAll(/\d+/g)) {
            out.push(m[0]);
        }
    }
    return out;
}

export function flush(): Promise<void> {
    return new Promise(resolve => setTimeout(resolve, 0));
}
