/* tslint:disable */
/* eslint-disable */

/**
 * Roots of the degree `p` relation satisfied by the Casimir-type element `t`.
 */
export function eq4_profile(p: number, lambda: string): string;

/**
 * Structure report of the reduced enveloping algebra of sl₂ at a point, as JSON.
 */
export function fiber_report(p: number, lambda: string): string;

/**
 * Strata of all points with the given λ_e, as rows indexed by λ_h and columns by λ_f.
 */
export function stratum_map(p: number, lambda_e: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly eq4_profile: (a: number, b: number, c: number) => [number, number, number, number];
    readonly fiber_report: (a: number, b: number, c: number) => [number, number, number, number];
    readonly stratum_map: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
