/** Thin typed client for the weeklens HTTP API. */

import type {
  DashboardLayout,
  EmaResponsePayload,
  SubmitResult,
  SurveyCurrent,
} from "./types.js";

export class ApiHttpError extends Error {
  constructor(
    public status: number,
    public body: unknown,
  ) {
    super(`HTTP ${status}`);
  }
}

export class Api {
  constructor(
    private baseUrl: string,
    private studyCode: string,
    private fetchImpl: typeof fetch = fetch,
  ) {}

  private headers(): Record<string, string> {
    return {
      Authorization: `Bearer ${this.studyCode}`,
      "Content-Type": "application/json",
    };
  }

  private async request(path: string, init?: RequestInit): Promise<Response> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      ...init,
      headers: { ...this.headers(), ...(init?.headers ?? {}) },
    });
    if (!response.ok) {
      let body: unknown = null;
      try {
        body = await response.json();
      } catch {
        // non-JSON error body: keep null
      }
      throw new ApiHttpError(response.status, body);
    }
    return response;
  }

  async surveyCurrent(): Promise<SurveyCurrent> {
    const response = await this.request("/api/survey/current");
    return (await response.json()) as SurveyCurrent;
  }

  async submitResponse(payload: EmaResponsePayload): Promise<SubmitResult> {
    const response = await this.request("/api/responses", {
      method: "POST",
      body: JSON.stringify(payload),
    });
    return (await response.json()) as SubmitResult;
  }

  async dashboardSvg(weekStart: string): Promise<string> {
    const response = await this.request(`/api/dashboard.svg?week=${weekStart}`);
    return await response.text();
  }

  async dashboardLayout(weekStart: string): Promise<DashboardLayout> {
    const response = await this.request(`/api/dashboard/layout.json?week=${weekStart}`);
    return (await response.json()) as DashboardLayout;
  }
}
