import { describe, expect, it } from 'vitest';

import { renderApp, renderGrid, renderKiiGauge, renderWeights } from '../src/view.js';
import type { SessionReport } from '../src/types.js';

/** Sentinel report: every number is distinctive so leaks are obvious. */
function sentinelReport(): SessionReport {
  return {
    id: 'sentinel-session',
    labels: ['A', 'B', 'C'],
    n: 3,
    status: 'overdetermined',
    remaining: 0,
    superfluous: 7,
    judgments: [
      { i: 0, j: 1, value: 2.0001 },
      { i: 0, j: 2, value: 5.0203 },
      { i: 1, j: 2, value: 3.0405 },
    ],
    matrix: {
      complete: true,
      entries: [
        [1.0101, 2.0001, 5.0203],
        [0.49998, 1.0102, 3.0405],
        [0.19919, 0.32889, 1.0103],
      ],
    },
    kii: 0.16789,
    worst_triad: { i: 0, k: 1, j: 2, x: 2.0001, y: 5.0203, z: 3.0405, indicator: 0.16789 },
    weights: [0.58211, 0.30877, 0.10912],
    ranking: [
      { label: 'A', weight: 0.58211 },
      { label: 'B', weight: 0.30877 },
      { label: 'C', weight: 0.10912 },
    ],
  };
}

function collectNumbers(value: unknown, into: Set<string>): void {
  if (typeof value === 'number') {
    into.add(String(value));
  } else if (Array.isArray(value)) {
    value.forEach((v) => collectNumbers(v, into));
  } else if (value && typeof value === 'object') {
    Object.values(value).forEach((v) => collectNumbers(v, into));
  }
}

const NUMBER_TOKEN = /-?\d+(?:\.\d+)?(?:e[-+]?\d+)?/gi;

describe('sentinel double: no client-side numeric computation', () => {
  it('every number rendered appears verbatim in the service response', () => {
    const report = sentinelReport();
    const html = renderApp(report);

    const allowed = new Set<string>();
    collectNumbers(report, allowed);

    // visible text numbers
    const text = html.replace(/<[^>]*>/g, ' ');
    for (const token of text.match(NUMBER_TOKEN) ?? []) {
      expect(allowed, `text number ${token} not in response`).toContain(token);
    }
    // bar/gauge scale factors
    for (const match of html.matchAll(/scaleX\(([^)]+)\)/g)) {
      expect(allowed, `scale factor ${match[1]} not in response`).toContain(match[1]);
    }
  });

  it('rendered values are not re-rounded', () => {
    const report = sentinelReport();
    report.kii = 0.16666666666700003; // deliberately ugly; must appear exactly
    report.status = 'overdetermined';
    const html = renderKiiGauge(report);
    expect(html).toContain('0.16666666666700003');
  });
});

describe('grid rendering', () => {
  it('marks entered, reciprocal, implied and missing cells distinctly', () => {
    const report = sentinelReport();
    report.status = 'needs_judgments';
    report.remaining = 1;
    report.judgments = [{ i: 0, j: 1, value: 2.0001 }];
    report.matrix = {
      complete: false,
      entries: [
        [1, 2.0001, null],
        [0.49998, 1, null],
        [null, null, 1],
      ],
    };
    report.kii = null;
    report.worst_triad = null;
    report.weights = null;
    report.ranking = null;

    const html = renderGrid(report);
    expect(html).toMatch(/class="cell entered"[^>]*>2\.0001</);
    expect(html).toMatch(/class="cell reciprocal"[^>]*>0\.49998</);
    expect(html).toMatch(/class="cell missing"[^>]*>&mdash;</);
    expect(html).not.toContain('implied"');
  });

  it('implied cells are visually distinct from entered ones', () => {
    const report = sentinelReport();
    report.status = 'tree_complete';
    report.judgments = [
      { i: 0, j: 1, value: 2.0001 },
      { i: 1, j: 2, value: 3.0405 },
    ];
    report.kii = null;
    report.worst_triad = null;
    const html = renderGrid(report);
    expect(html).toMatch(/class="cell implied"[^>]*>5\.0203</);
    expect(html).toMatch(/class="cell entered"[^>]*>2\.0001</);
  });

  it('highlights exactly the worst triad cells', () => {
    const html = renderGrid(sentinelReport());
    const worst = [...html.matchAll(/class="[^"]* worst"/g)];
    expect(worst).toHaveLength(3);
    expect(html).toMatch(/entered worst"[^>]*data-pair="A\/B"/);
    expect(html).toMatch(/entered worst"[^>]*data-pair="A\/C"/);
    expect(html).toMatch(/entered worst"[^>]*data-pair="B\/C"/);
  });

  it('escapes entity labels', () => {
    const report = sentinelReport();
    report.labels = ['<b>A</b>', 'B', 'C'];
    expect(renderGrid(report)).toContain('&lt;b&gt;A&lt;/b&gt;');
  });
});

describe('gauge and weights visibility', () => {
  it('gauge appears only when the backend says overdetermined', () => {
    const report = sentinelReport();
    expect(renderKiiGauge(report)).toContain('kii-gauge');
    report.status = 'tree_complete';
    report.kii = null;
    expect(renderKiiGauge(report)).toBe('');
  });

  it('weights render in the service ranking order', () => {
    const html = renderWeights(sentinelReport());
    const order = [...html.matchAll(/weight-label">([^<]+)</g)].map((m) => m[1]);
    expect(order).toEqual(['A', 'B', 'C']);
  });

  it('weights panel hidden for a fresh session', () => {
    const report = sentinelReport();
    report.weights = null;
    report.ranking = null;
    expect(renderWeights(report)).toBe('');
  });
});
