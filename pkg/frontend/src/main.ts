/**
 * Browser glue: the only module that touches `document`. Reads form values,
 * drives the controller, writes its HTML back into the page.
 */

import { ApiClient } from './api.js';
import { ElicitationController } from './controller.js';
import { escapeHtml } from './view.js';

const api = new ApiClient(
  (window as unknown as { PAIRCOMP_BASE_URL?: string }).PAIRCOMP_BASE_URL ??
    'http://127.0.0.1:8000',
);
const controller = new ElicitationController(api);

function el<T extends HTMLElement>(id: string): T {
  return document.getElementById(id) as T;
}

function repaint(labels: string[]): void {
  el<HTMLDivElement>('app').innerHTML = controller.html();
  const options = labels
    .map((label, idx) => `<option value="${idx}">${escapeHtml(label)}</option>`)
    .join('');
  el<HTMLSelectElement>('pair-i').innerHTML = options;
  const pairJ = el<HTMLSelectElement>('pair-j');
  pairJ.innerHTML = options;
  if (labels.length > 1 && pairJ.selectedIndex === 0) {
    pairJ.selectedIndex = 1;
  }
}

let activeLabels: string[] = [];

el<HTMLButtonElement>('start').addEventListener('click', async () => {
  const raw = el<HTMLInputElement>('labels').value;
  activeLabels = raw.split(',').map((s) => s.trim()).filter((s) => s.length > 0);
  await controller.start(activeLabels);
  el<HTMLDivElement>('judgment-form').hidden = false;
  repaint(activeLabels);
});

el<HTMLButtonElement>('submit').addEventListener('click', async () => {
  const i = Number(el<HTMLSelectElement>('pair-i').value);
  const j = Number(el<HTMLSelectElement>('pair-j').value);
  await controller.submitJudgment(i, j, el<HTMLInputElement>('value').value);
  repaint(activeLabels);
});
