/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_curve_free: (a: number, b: number) => void;
export const __wbg_evaluation_free: (a: number, b: number) => void;
export const __wbg_get_curve_count: (a: number) => [number, number];
export const __wbg_get_curve_density: (a: number) => [number, number];
export const __wbg_get_curve_s_eq_p: (a: number) => [number, number];
export const __wbg_get_curve_shape_ratio: (a: number) => [number, number];
export const __wbg_get_curve_x: (a: number) => [number, number];
export const __wbg_get_evaluation_factorization: (a: number) => [number, number];
export const __wbg_get_evaluation_n: (a: number) => [number, number];
export const __wbg_get_evaluation_p: (a: number) => [number, number];
export const __wbg_get_evaluation_s: (a: number) => [number, number];
export const __wbg_get_evaluation_s_neq_p: (a: number) => number;
export const __wbg_get_profile_p: (a: number) => [number, number];
export const __wbg_get_profile_s: (a: number) => [number, number];
export const __wbg_get_profile_start: (a: number) => number;
export const __wbg_profile_free: (a: number, b: number) => void;
export const __wbg_set_curve_count: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_density: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_s_eq_p: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_shape_ratio: (a: number, b: number, c: number) => void;
export const __wbg_set_curve_x: (a: number, b: number, c: number) => void;
export const __wbg_set_evaluation_factorization: (a: number, b: number, c: number) => void;
export const __wbg_set_evaluation_n: (a: number, b: number, c: number) => void;
export const __wbg_set_evaluation_p: (a: number, b: number, c: number) => void;
export const __wbg_set_evaluation_s: (a: number, b: number, c: number) => void;
export const __wbg_set_evaluation_s_neq_p: (a: number, b: number) => void;
export const __wbg_set_profile_p: (a: number, b: number, c: number) => void;
export const __wbg_set_profile_s: (a: number, b: number, c: number) => void;
export const __wbg_set_profile_start: (a: number, b: number) => void;
export const evaluate: (a: number, b: number) => [number, number, number];
export const nk_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const profile: (a: number, b: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
