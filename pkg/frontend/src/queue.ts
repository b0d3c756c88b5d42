// At most one mutation request in flight; further UI actions queue up
// and run in order once the current one settles.

export class RequestQueue {
  private chain: Promise<unknown> = Promise.resolve();
  private pending = 0;

  get size(): number {
    return this.pending;
  }

  enqueue<T>(task: () => Promise<T>): Promise<T> {
    this.pending += 1;
    const run = this.chain.then(task);
    this.chain = run.catch(() => undefined).then(() => {
      this.pending -= 1;
    });
    return run;
  }
}
