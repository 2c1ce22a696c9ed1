import type { SessionCreated, SessionReport, ServiceError } from './types.js';

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ServiceError) {
    super(body.message);
    this.code = body.code;
    this.status = status;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client over the session endpoints. */
export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, body as ServiceError);
    }
    return body as T;
  }

  createSession(labels: string[]): Promise<SessionCreated> {
    return this.request('/sessions', {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ labels }),
    });
  }

  addJudgment(sessionId: string, i: number, j: number, value: number): Promise<SessionReport> {
    return this.request(`/sessions/${sessionId}/judgments`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ i, j, value }),
    });
  }

  getReport(sessionId: string): Promise<SessionReport> {
    return this.request(`/sessions/${sessionId}/report`);
  }

  async deleteSession(sessionId: string): Promise<void> {
    await this.request(`/sessions/${sessionId}`, { method: 'DELETE' });
  }
}
