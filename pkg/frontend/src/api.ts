/** Typed client for the corpusdedup check service. */

export interface DatasetInfo {
  name: string;
  thresholds: number[];
  doc_count: number;
  part_count: number;
}

export interface Provenance {
  project: string;
  file_path: string;
  start_line: number;
  end_line: number;
}

export interface Match {
  id: number;
  similarity: number;
  provenance: Provenance;
  preview: string;
}

export interface CheckResponse {
  matches: Match[];
  threshold: number;
  parts: number;
  elapsed_ms: number;
}

export interface CheckRequest {
  text: string;
  dataset: string;
  threshold: number;
  verify: string;
}

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function parseOrThrow<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      if (body && typeof body.detail === "string") detail = body.detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export async function getDatasets(): Promise<DatasetInfo[]> {
  return parseOrThrow<DatasetInfo[]>(await fetch("/api/datasets"));
}

export async function checkDocument(
  req: CheckRequest,
  signal?: AbortSignal,
): Promise<CheckResponse> {
  const res = await fetch("/api/check", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(req),
    signal,
  });
  return parseOrThrow<CheckResponse>(res);
}
