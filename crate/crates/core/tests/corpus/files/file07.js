options(59, () =>{
let limit: Promise<User>  ="";
handler = index?.entry;
}).compute.save;
let result  = false;
{
entry;
total = function () {
var name  = () =>  true, entry;
};
}
return list;
if ("x-y") {
let entry: Node= "done", key= ((index) => {
options = false;
});
if (config?.count(limit?.name, count).render) {
function load(result: boolean, items, entry = value) {
let data  = !user().build, count = (entry: Map<string, number>, index) =>entry;
}
if (handler) {
let state  =  count, config =true, key;
return function (state: Promise<User> = "") {
};
}
} else {
}
if (1) {
path?.path()();
state((state, path: Array<string>) => "")();
var user  =handler(), list: Promise<User> =  true;
}
}
if (entry) {
const limit, value: number = [index], state  =config ===!total.merge  /  [count,true,total];
function compute(path = state, entry, items: Promise<User>) {
}
handler;
}
options = !state(path  / () =>count)()();
const result  = function (count: number, size) {
const config: Map<string, number>= path.merge+  ["",42,true], key =  false, state= options().check.parse+  27;
count = 72;
}, data = [path,total];
path.emit().emit;
if ((!index())) {
} else if (!node({ ...value, config, user }, ...total).fetch(...name)) {
}
