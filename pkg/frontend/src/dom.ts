// Small DOM builders, no framework.

const SVG_NS = 'http://www.w3.org/2000/svg';

type Attrs = Record<string, string | number | boolean | ((ev: Event) => void)>;

function apply(node: Element, attrs: Attrs): void {
    for (const [key, value] of Object.entries(attrs)) {
        if (typeof value === 'function') {
            node.addEventListener(key.replace(/^on/, ''), value as EventListener);
        } else if (typeof value === 'boolean') {
            if (value) {
                node.setAttribute(key, '');
            }
        } else {
            node.setAttribute(key, String(value));
        }
    }
}

export function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    attrs: Attrs = {},
    ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
    const node = document.createElement(tag);
    apply(node, attrs);
    node.append(...children);
    return node;
}

export function svg(tag: string, attrs: Attrs = {}, ...children: (Node | string)[]): SVGElement {
    const node = document.createElementNS(SVG_NS, tag) as SVGElement;
    apply(node, attrs);
    node.append(...children);
    return node;
}

export function clear(node: Element): void {
    while (node.firstChild) {
        node.removeChild(node.firstChild);
    }
}

export const COLORS = {
    upper: '#d6604d',
    lower: '#4393c3',
    neutral: '#66a182',
    coTotal: '#c9c9c9',
    coShared: '#e8903a',
    separator: '#777777',
    group: '#8868b0',
};

export function roleColor(role: 'upper' | 'lower' | null): string {
    if (role === 'upper') return COLORS.upper;
    if (role === 'lower') return COLORS.lower;
    return COLORS.neutral;
}
