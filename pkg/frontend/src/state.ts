/** Session log of performed checks and the removal-list export. */

export interface CheckEntry {
  label: string;
  threshold: number;
  matchCount: number;
}

export class Session {
  entries: CheckEntry[] = [];
  private counter = 0;

  nextLabel(): string {
    this.counter += 1;
    return `doc-${this.counter}`;
  }

  record(label: string, threshold: number, matchCount: number): void {
    this.entries.push({ label, threshold, matchCount });
  }
}

/**
 * Labels of checked documents with at least one match at the given
 * threshold, one per line. The UI ties a download link to this content.
 */
export function buildRemovalExport(session: Session, threshold: number): string {
  const labels = session.entries
    .filter((e) => e.threshold === threshold && e.matchCount > 0)
    .map((e) => e.label);
  return labels.length ? labels.join("\n") + "\n" : "";
}
