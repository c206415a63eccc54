/**
 * TypeScript client for the jobgate HTTP service.
 *
 * The service fronts a native-style dispatch gate: numbered jobs over flat
 * int32 buffers.  Raw access (`call`) mirrors the gate entry point
 * one-to-one; `swap`, `version` and `polyroots` use the server-side staged
 * wrappers and speak plain values.
 */

export interface CallOptions {
  /** Buffer capacity; defaults to data.length, padded with zeros when larger. */
  size?: number;
  /** Any nonzero value turns on the gate's per-call trace line. */
  verbose?: number;
}

export interface CallResult {
  status: number;
  data: number[];
}

export interface ComplexRoot {
  real: number;
  imag: number;
}

export interface ServiceInfo {
  name: string;
  base: number;
  stages: number;
}

export interface ManifestInfo {
  library: string;
  version: string;
  released: string;
  services: ServiceInfo[];
}

/** Gate status codes, as returned in CallResult.status. */
export const GateStatus = {
  Ok: 0,
  UnknownJob: 1,
  StageOrder: 2,
  BufferTooSmall: 3,
  MalformedPayload: 4,
  NotInitialized: 5,
  ComputeFailed: 6,
} as const;

export class JobGateError extends Error {
  constructor(
    message: string,
    readonly httpStatus: number,
    readonly gateStatus?: number,
  ) {
    super(message);
    this.name = "JobGateError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class JobGateClient {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl = "http://127.0.0.1:8000", fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? undefined : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let gateStatus: number | undefined;
      let detailText = "";
      try {
        const payload = (await response.json()) as { detail?: unknown };
        detailText = JSON.stringify(payload.detail ?? payload);
        if (payload.detail && typeof payload.detail === "object" && "gate_status" in payload.detail) {
          gateStatus = Number((payload.detail as { gate_status: unknown }).gate_status);
        }
      } catch {
        // non-JSON error body; report the HTTP status alone
      }
      throw new JobGateError(
        `${method} ${path} failed: HTTP ${response.status} ${detailText}`,
        response.status,
        gateStatus,
      );
    }
    return (await response.json()) as T;
  }

  async health(): Promise<boolean> {
    const body = await this.request<{ status: string }>("GET", "/health");
    return body.status === "ok";
  }

  manifest(): Promise<ManifestInfo> {
    return this.request<ManifestInfo>("GET", "/manifest");
  }

  async init(): Promise<number> {
    const body = await this.request<{ status: number }>("POST", "/gate/init");
    return body.status;
  }

  async final(): Promise<number> {
    const body = await this.request<{ status: number }>("POST", "/gate/final");
    return body.status;
  }

  /** Raw gate entry point: one job, one buffer, one status back. */
  call(job: number, data: number[], options: CallOptions = {}): Promise<CallResult> {
    return this.request<CallResult>("POST", "/gate/call", {
      job,
      data,
      size: options.size ?? null,
      verbose: options.verbose ?? 0,
    });
  }

  async swap(text: string, verbose = 0): Promise<string> {
    const body = await this.request<{ text: string }>("POST", "/services/swap", { text, verbose });
    return body.text;
  }

  async version(): Promise<string> {
    const body = await this.request<{ version: string }>("GET", "/services/version");
    return body.version;
  }

  /** Roots of c0 + c1 x + ... + cd x^d; coefficients in ascending order. */
  async polyroots(coefficients: number[], verbose = 0): Promise<ComplexRoot[]> {
    const body = await this.request<{ roots: ComplexRoot[] }>("POST", "/services/polyroots", {
      coefficients,
      verbose,
    });
    return body.roots;
  }
}
