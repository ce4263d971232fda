/* tslint:disable */
/* eslint-disable */

/**
 * `N_k` sampled on a geometric grid, split by whether `S(n) = P(n)`.
 */
export class Curve {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    count: Float64Array;
    density: Float64Array;
    s_eq_p: Float64Array;
    shape_ratio: Float64Array;
    x: Float64Array;
}

export class Evaluation {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    factorization: string;
    n: string;
    p: string;
    s_neq_p: boolean;
    s: string;
}

export class Profile {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    p: Uint32Array;
    s: Uint32Array;
    start: number;
}

/**
 * `S(n)`, `P(n)` and the factorization of a decimal `n < 2^64`.
 */
export function evaluate(n: string): Evaluation;

/**
 * `N_k(x)`, its density and shape ratio at `points` grid values up to `x_max`.
 */
export function nk_curve(x_max: number, k: string, points: number): Curve;

/**
 * `S(n)` and `P(n)` for every `n` in `[start, end]`.
 */
export function profile(start: number, end: number): Profile;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_curve_free: (a: number, b: number) => void;
    readonly __wbg_evaluation_free: (a: number, b: number) => void;
    readonly __wbg_get_curve_count: (a: number) => [number, number];
    readonly __wbg_get_curve_density: (a: number) => [number, number];
    readonly __wbg_get_curve_s_eq_p: (a: number) => [number, number];
    readonly __wbg_get_curve_shape_ratio: (a: number) => [number, number];
    readonly __wbg_get_curve_x: (a: number) => [number, number];
    readonly __wbg_get_evaluation_factorization: (a: number) => [number, number];
    readonly __wbg_get_evaluation_n: (a: number) => [number, number];
    readonly __wbg_get_evaluation_p: (a: number) => [number, number];
    readonly __wbg_get_evaluation_s: (a: number) => [number, number];
    readonly __wbg_get_evaluation_s_neq_p: (a: number) => number;
    readonly __wbg_get_profile_p: (a: number) => [number, number];
    readonly __wbg_get_profile_s: (a: number) => [number, number];
    readonly __wbg_get_profile_start: (a: number) => number;
    readonly __wbg_profile_free: (a: number, b: number) => void;
    readonly __wbg_set_curve_count: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_density: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_s_eq_p: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_shape_ratio: (a: number, b: number, c: number) => void;
    readonly __wbg_set_curve_x: (a: number, b: number, c: number) => void;
    readonly __wbg_set_evaluation_factorization: (a: number, b: number, c: number) => void;
    readonly __wbg_set_evaluation_n: (a: number, b: number, c: number) => void;
    readonly __wbg_set_evaluation_p: (a: number, b: number, c: number) => void;
    readonly __wbg_set_evaluation_s: (a: number, b: number, c: number) => void;
    readonly __wbg_set_evaluation_s_neq_p: (a: number, b: number) => void;
    readonly __wbg_set_profile_p: (a: number, b: number, c: number) => void;
    readonly __wbg_set_profile_s: (a: number, b: number, c: number) => void;
    readonly __wbg_set_profile_start: (a: number, b: number) => void;
    readonly evaluate: (a: number, b: number) => [number, number, number];
    readonly nk_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly profile: (a: number, b: number) => [number, number, number];
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
