/**
 * HTML renderers for the elicitation screen.
 *
 * Every number that appears in the output is copied verbatim from a service
 * report (String(n) of a response field). No weight, ratio or indicator is
 * ever computed here; cells the service has not filled stay visibly empty.
 */

import type { SessionReport } from './types.js';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;')
    .replace(/'/g, '&#39;');
}

function enteredPairs(report: SessionReport): Set<string> {
  return new Set(report.judgments.map((j) => `${j.i},${j.j}`));
}

function worstCells(report: SessionReport): Set<string> {
  const worst = report.worst_triad;
  if (!worst) {
    return new Set();
  }
  return new Set([
    `${worst.i},${worst.k}`,
    `${worst.i},${worst.j}`,
    `${worst.k},${worst.j}`,
  ]);
}

export function renderStatusBanner(report: SessionReport): string {
  let text: string;
  if (report.status === 'needs_judgments') {
    text = `needs ${String(report.remaining)} more judgment(s) to span all entities`;
  } else if (report.status === 'tree_complete') {
    text = 'spanning tree complete; every missing ratio is implied';
  } else {
    text = `overdetermined: ${String(report.superfluous)} superfluous judgment(s), watch the inconsistency gauge`;
  }
  return `<div class="banner banner-${report.status}">${text}</div>`;
}

export function renderGrid(report: SessionReport): string {
  const entered = enteredPairs(report);
  const worst = worstCells(report);
  const labels = report.labels;

  const head = ['<tr><th></th>']
    .concat(labels.map((l) => `<th>${escapeHtml(l)}</th>`))
    .concat(['</tr>'])
    .join('');

  const rows: string[] = [];
  for (let i = 0; i < report.n; i += 1) {
    const cells: string[] = [`<th>${escapeHtml(labels[i] ?? '')}</th>`];
    for (let j = 0; j < report.n; j += 1) {
      const value = report.matrix.entries[i]?.[j] ?? null;
      const classes = ['cell'];
      if (i === j) {
        classes.push('diagonal');
      } else if (entered.has(`${i},${j}`)) {
        classes.push('entered');
      } else if (entered.has(`${j},${i}`)) {
        // the mirror of an entered cell; the inverse value comes from the report
        classes.push('reciprocal');
      } else if (value !== null) {
        classes.push('implied');
      } else {
        classes.push('missing');
      }
      if (worst.has(`${i},${j}`)) {
        classes.push('worst');
      }
      const shown = value === null ? '&mdash;' : String(value);
      const pair = `${escapeHtml(labels[i] ?? '')}/${escapeHtml(labels[j] ?? '')}`;
      cells.push(`<td class="${classes.join(' ')}" data-pair="${pair}">${shown}</td>`);
    }
    rows.push(`<tr>${cells.join('')}</tr>`);
  }
  return `<table class="grid">${head}${rows.join('')}</table>`;
}

export function renderKiiGauge(report: SessionReport): string {
  if (report.status !== 'overdetermined' || report.kii === null) {
    return '';
  }
  const kii = String(report.kii);
  let triad = '';
  if (report.worst_triad) {
    const w = report.worst_triad;
    const names = [w.i, w.k, w.j].map((idx) => escapeHtml(report.labels[idx] ?? ''));
    triad = `<div class="worst-triad">worst triad ${names.join(', ')}: ` +
      `(${String(w.x)}, ${String(w.y)}, ${String(w.z)})</div>`;
  }
  return (
    `<div class="kii-gauge"><span class="kii-label">inconsistency</span>` +
    `<span class="kii-value">${kii}</span>` +
    `<div class="gauge-track"><div class="gauge-fill" style="transform: scaleX(${kii})"></div></div>` +
    `${triad}</div>`
  );
}

export function renderWeights(report: SessionReport): string {
  if (!report.ranking || !report.weights) {
    return '';
  }
  const bars = report.ranking
    .map((entry) => {
      const weight = String(entry.weight);
      return (
        `<div class="weight-row"><span class="weight-label">${escapeHtml(entry.label)}</span>` +
        `<div class="bar-track"><div class="bar-fill" style="transform: scaleX(${weight})"></div></div>` +
        `<span class="weight-value">${weight}</span></div>`
      );
    })
    .join('');
  return `<div class="weights">${bars}</div>`;
}

export function renderInputError(message: string | null): string {
  return message ? `<div class="input-error">${escapeHtml(message)}</div>` : '';
}

export function renderApp(report: SessionReport | null, inputError: string | null = null): string {
  if (report === null) {
    return `<div class="empty">no active session</div>${renderInputError(inputError)}`;
  }
  return [
    renderStatusBanner(report),
    renderInputError(inputError),
    renderGrid(report),
    renderKiiGauge(report),
    renderWeights(report),
  ].join('');
}
