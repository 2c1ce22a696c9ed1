/**
 * Session flow: start a session, push judgments, re-render from the latest
 * service report. Mutations re-fetch the report afterwards (simple polling
 * refresh, no push channel). Non-positive input never reaches the wire; it
 * is rejected inline, mirroring the service's own NonPositiveValue error.
 */

import { ApiClient, ApiError } from './api.js';
import { parseRatioInput } from './parse.js';
import { renderApp } from './view.js';
import type { SessionReport } from './types.js';

export class ElicitationController {
  private report: SessionReport | null = null;
  private sessionId: string | null = null;
  private inputError: string | null = null;

  constructor(private readonly api: ApiClient) {}

  get currentReport(): SessionReport | null {
    return this.report;
  }

  async start(labels: string[]): Promise<void> {
    const created = await this.api.createSession(labels);
    this.sessionId = created.id;
    this.inputError = null;
    await this.refresh();
  }

  async refresh(): Promise<void> {
    if (this.sessionId === null) {
      return;
    }
    this.report = await this.api.getReport(this.sessionId);
  }

  /**
   * Parse and submit one judgment. Returns true when the value was posted;
   * false when it was rejected inline (nothing sent to the service).
   */
  async submitJudgment(i: number, j: number, rawValue: string): Promise<boolean> {
    if (this.sessionId === null) {
      this.inputError = 'no active session';
      return false;
    }
    const parsed = parseRatioInput(rawValue);
    if (!parsed.ok) {
      this.inputError = parsed.reason;
      return false;
    }
    try {
      await this.api.addJudgment(this.sessionId, i, j, parsed.value);
      this.inputError = null;
    } catch (error) {
      this.inputError = error instanceof ApiError ? error.message : String(error);
      return false;
    }
    await this.refresh();
    return true;
  }

  html(): string {
    return renderApp(this.report, this.inputError);
  }
}
